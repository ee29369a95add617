#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rowsolve/complex_matrix.hpp"
#include "rowsolve/row_orthonormalize.hpp"

namespace rowsolve {

enum class Variation {
    transform_rhs,  // A x = b  ->  A' x = b'
    accumulate_m,   // A x = b  ->  A' x = M b; also yields G = (A')^* M
};

/// Outcome of the zero-row residual scan: the system is consistent iff the
/// right-hand side carries (numerically) nothing on the rows the
/// orthonormalization zeroed out.
struct ConsistencyReport {
    bool consistent = true;
    std::optional<std::size_t> offending_row;  // 0-based; first violating zero row
    double worst_residual = 0.0;               // max |b'_i| over zero rows
};

struct SolveResult {
    ColumnVector x_p;           // minimum-norm particular solution, length n
    std::size_t rank = 0;       // |W|
    bool consistent = true;
    std::optional<std::size_t> offending_row;  // set when inconsistent
    ComplexMatrix projector;    // n x n orthogonal projector onto null(A)
    std::optional<ComplexMatrix> g;         // n x m; present for accumulate_m
    std::optional<ComplexMatrix> m_factor;  // m x m; present for accumulate_m
    RowOpLog log;
};

/// x_p = (A')^* b'. Lies in the row space of A, hence has minimum norm
/// among all solutions of a consistent system.
ColumnVector particular_solution(const QuasiOrthonormalRows& q, const ColumnVector& b_prime);

/// P = I_n - (A')^* A'. Hermitian, idempotent, A P == 0; every solution of
/// A x = 0 is P y for some y.
ComplexMatrix null_projector(const QuasiOrthonormalRows& q);

/// G = (A')^* M. Satisfies Penrose conditions 1, 2 and 4; also condition 3
/// (and is then the Moore-Penrose inverse) when A has full row rank.
ComplexMatrix generalized_inverse(const QuasiOrthonormalRows& q, const ComplexMatrix& m_factor);

/// x_h = P y for an arbitrary y; always satisfies A x_h == 0.
ColumnVector homogeneous_solution(const ComplexMatrix& projector, const ColumnVector& y);

/// Orthonormal basis of range(P) = null(A), extracted by running the row
/// orthonormalization itself over the rows of P and conjugating the
/// surviving unit rows back into column vectors. Throws
/// std::invalid_argument if P is not Hermitian idempotent within tol.
std::vector<ColumnVector> null_space_basis(const ComplexMatrix& projector, double tol);

/// Scans b' on the zero rows of A'. eps scales to eps * max(1, ||b'||).
ConsistencyReport consistency_check(const QuasiOrthonormalRows& q, const ColumnVector& b_prime,
                                    double eps);

/// Runs the selected variation end to end. Inconsistent systems are a
/// diagnosed condition, not an error: x_p still solves the projected system
/// and `consistent` is false with the offending row recorded.
SolveResult solve(const ComplexMatrix& a, const ColumnVector& b,
                  Variation variation = Variation::transform_rhs,
                  double eps = default_eps_rel);

/// A X = B for an m x p right-hand side, via a single accumulate_m pass:
/// X_p = G B. Column j of x_p matches solve(a, column j of B).x_p.
struct MatrixSolveResult {
    ComplexMatrix x_p;        // n x p
    ComplexMatrix projector;  // n x n
    ComplexMatrix g;          // n x m
    ComplexMatrix m_factor;   // m x m
    std::size_t rank = 0;
    std::vector<ConsistencyReport> column_consistency;  // one per column of B
    RowOpLog log;
};

MatrixSolveResult solve_matrix_rhs(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double eps = default_eps_rel);

}  // namespace rowsolve
