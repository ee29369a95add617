#pragma once

#include <vector>

#include "rowsolve/complex_matrix.hpp"

namespace rowsolve {

struct ConditionResult {
    bool holds = false;
    double residual = 0.0;
};

/// Residuals of the four Penrose conditions for a candidate generalized
/// inverse G of A:
///   1: A G A = A     2: G A G = G     3: A G Hermitian     4: G A Hermitian
struct PenroseReport {
    ConditionResult p1, p2, p3, p4;
    std::vector<int> inferred_class;  // conditions that hold, ascending
};

/// Residuals are max entry magnitudes of (AGA - A), (GAG - G),
/// (AG - (AG)^*), (GA - (GA)^*), each divided by max(1, Frobenius norm of
/// the matrix being reproduced) so tolerances are scale-free.
PenroseReport penrose_check(const ComplexMatrix& a, const ComplexMatrix& g, double tol);

/// Independent Moore-Penrose oracle for full-row-rank A: A^* (A A^*)^{-1},
/// with the m x m inverse computed by Gauss-Jordan elimination with partial
/// pivoting. Shares no code with the orthonormalization path. Throws
/// std::domain_error when elimination hits a pivot below
/// 1e-12 * ||A A^*|| (rank-deficient input; oracle not applicable).
ComplexMatrix oracle_pseudoinverse(const ComplexMatrix& a);

struct NormCertificate {
    bool holds = false;
    double residual = 0.0;  // ||P x_p|| / max(1, ||x_p||)
};

/// Certifies minimum norm: x_p is orthogonal to null(A) iff its projection
/// onto the null space vanishes.
NormCertificate minimum_norm_certificate(const ColumnVector& x_p, const ComplexMatrix& projector,
                                         double tol);

}  // namespace rowsolve
