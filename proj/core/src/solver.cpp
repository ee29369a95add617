#include "rowsolve/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rowsolve {

ColumnVector particular_solution(const QuasiOrthonormalRows& q, const ColumnVector& b_prime) {
    if (b_prime.cols() != 1 || b_prime.rows() != q.a_prime.rows()) {
        throw std::invalid_argument("particular_solution: b' must be a column vector with one entry per row of A'");
    }
    return matrix_product(conjugate_transpose(q.a_prime), b_prime);
}

ComplexMatrix null_projector(const QuasiOrthonormalRows& q) {
    const std::size_t n = q.a_prime.cols();
    return ComplexMatrix::identity(n) -
           matrix_product(conjugate_transpose(q.a_prime), q.a_prime);
}

ComplexMatrix generalized_inverse(const QuasiOrthonormalRows& q, const ComplexMatrix& m_factor) {
    const std::size_t m = q.a_prime.rows();
    if (m_factor.rows() != m || m_factor.cols() != m) {
        throw std::invalid_argument("generalized_inverse: M must be m x m for an m x n A'");
    }
    return matrix_product(conjugate_transpose(q.a_prime), m_factor);
}

ColumnVector homogeneous_solution(const ComplexMatrix& projector, const ColumnVector& y) {
    if (y.cols() != 1 || y.rows() != projector.cols()) {
        throw std::invalid_argument("homogeneous_solution: y must be a column vector of length n");
    }
    return matrix_product(projector, y);
}

std::vector<ColumnVector> null_space_basis(const ComplexMatrix& projector, double tol) {
    if (projector.rows() != projector.cols()) {
        throw std::invalid_argument("null_space_basis: projector must be square");
    }
    const ComplexMatrix hermitian_gap = projector - conjugate_transpose(projector);
    const ComplexMatrix idempotent_gap = matrix_product(projector, projector) - projector;
    if (max_abs(hermitian_gap) > tol || max_abs(idempotent_gap) > tol) {
        throw std::invalid_argument("null_space_basis: input is not a Hermitian idempotent projector within tolerance");
    }

    // Reuse the audited orthonormalization kernel on the rows of P. The
    // surviving unit rows span the row space of P, which for a Hermitian P
    // is the conjugate of range(P); conjugating them back yields columns.
    ColumnVector ignored(projector.rows(), 1);
    const RhsTransformResult rotated = rop_transform_rhs(projector, ignored, tol);
    std::vector<ColumnVector> basis;
    basis.reserve(rotated.q.w.size());
    for (std::size_t i : rotated.q.w) {
        auto row = rotated.q.a_prime.row(i);
        std::vector<Complex> entries(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) entries[j] = std::conj(row[j]);
        basis.push_back(column_vector(std::move(entries)));
    }
    return basis;
}

ConsistencyReport consistency_check(const QuasiOrthonormalRows& q, const ColumnVector& b_prime,
                                    double eps) {
    if (b_prime.cols() != 1 || b_prime.rows() != q.a_prime.rows()) {
        throw std::invalid_argument("consistency_check: b' must be a column vector with one entry per row of A'");
    }
    const double threshold = eps * std::max(1.0, euclidean_norm(b_prime));
    ConsistencyReport report;
    for (std::size_t i = 0; i < q.a_prime.rows(); ++i) {
        if (q.w.contains(i)) continue;
        const double residual = std::abs(b_prime(i, 0));
        report.worst_residual = std::max(report.worst_residual, residual);
        if (residual > threshold && report.consistent) {
            report.consistent = false;
            report.offending_row = i;
        }
    }
    return report;
}

SolveResult solve(const ComplexMatrix& a, const ColumnVector& b, Variation variation, double eps) {
    if (b.cols() != 1 || b.rows() != a.rows()) {
        throw std::invalid_argument("solve: b must be a column vector with one entry per row of A");
    }
    SolveResult result{ColumnVector(a.cols(), 1), 0, true, std::nullopt,
                       ComplexMatrix::identity(a.cols()), std::nullopt, std::nullopt, {}};
    if (variation == Variation::transform_rhs) {
        RhsTransformResult t = rop_transform_rhs(a, b, eps);
        result.x_p = particular_solution(t.q, t.b_prime);
        result.rank = t.q.w.size();
        result.projector = null_projector(t.q);
        const ConsistencyReport consistency = consistency_check(t.q, t.b_prime, eps);
        result.consistent = consistency.consistent;
        result.offending_row = consistency.offending_row;
        result.log = std::move(t.log);
    } else {
        AccumulateResult t = rop_accumulate(a, eps);
        const ColumnVector b_prime = matrix_product(t.m_factor, b);
        result.x_p = particular_solution(t.q, b_prime);
        result.rank = t.q.w.size();
        result.projector = null_projector(t.q);
        const ConsistencyReport consistency = consistency_check(t.q, b_prime, eps);
        result.consistent = consistency.consistent;
        result.offending_row = consistency.offending_row;
        result.g = generalized_inverse(t.q, t.m_factor);
        result.m_factor = std::move(t.m_factor);
        result.log = std::move(t.log);
    }
    return result;
}

MatrixSolveResult solve_matrix_rhs(const ComplexMatrix& a, const ComplexMatrix& b, double eps) {
    if (b.rows() != a.rows()) {
        throw std::invalid_argument("solve_matrix_rhs: B has " + std::to_string(b.rows()) +
                                    " rows but A has " + std::to_string(a.rows()));
    }
    AccumulateResult t = rop_accumulate(a, eps);
    const ComplexMatrix b_prime = matrix_product(t.m_factor, b);
    const ComplexMatrix g = generalized_inverse(t.q, t.m_factor);

    MatrixSolveResult result{matrix_product(g, b),
                             null_projector(t.q),
                             g,
                             std::move(t.m_factor),
                             t.q.w.size(),
                             {},
                             std::move(t.log)};
    result.column_consistency.reserve(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Complex> column(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) column[i] = b_prime(i, j);
        result.column_consistency.push_back(
            consistency_check(t.q, column_vector(std::move(column)), eps));
    }
    return result;
}

}  // namespace rowsolve
