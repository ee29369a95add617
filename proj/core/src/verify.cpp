#include "rowsolve/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rowsolve {

namespace {

double scaled_residual(const ComplexMatrix& gap, const ComplexMatrix& reference) {
    return max_abs(gap) / std::max(1.0, frobenius_norm(reference));
}

}  // namespace

PenroseReport penrose_check(const ComplexMatrix& a, const ComplexMatrix& g, double tol) {
    if (g.rows() != a.cols() || g.cols() != a.rows()) {
        throw std::invalid_argument("penrose_check: G must be n x m for an m x n A (got " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + ")");
    }
    const ComplexMatrix ag = matrix_product(a, g);
    const ComplexMatrix ga = matrix_product(g, a);

    PenroseReport report;
    report.p1.residual = scaled_residual(matrix_product(ag, a) - a, a);
    report.p2.residual = scaled_residual(matrix_product(ga, g) - g, g);
    report.p3.residual = scaled_residual(ag - conjugate_transpose(ag), ag);
    report.p4.residual = scaled_residual(ga - conjugate_transpose(ga), ga);

    ConditionResult* conditions[] = {&report.p1, &report.p2, &report.p3, &report.p4};
    for (int c = 0; c < 4; ++c) {
        conditions[c]->holds = conditions[c]->residual <= tol;
        if (conditions[c]->holds) report.inferred_class.push_back(c + 1);
    }
    return report;
}

ComplexMatrix oracle_pseudoinverse(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const ComplexMatrix gram = matrix_product(a, conjugate_transpose(a));  // m x m, Hermitian
    const double pivot_floor = 1e-12 * frobenius_norm(gram);

    // Gauss-Jordan with partial pivoting on [gram | I].
    ComplexMatrix work = gram;
    ComplexMatrix inverse = ComplexMatrix::identity(m);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < m; ++r) {
            const double candidate = std::abs(work(r, col));
            if (candidate > best) {
                best = candidate;
                pivot = r;
            }
        }
        if (best <= pivot_floor) {
            throw std::domain_error("oracle_pseudoinverse: A A^* is numerically singular (A is not full row rank)");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < m; ++j) {
                std::swap(work(col, j), work(pivot, j));
                std::swap(inverse(col, j), inverse(pivot, j));
            }
        }
        const Complex inv_pivot = Complex{1.0, 0.0} / work(col, col);
        for (std::size_t j = 0; j < m; ++j) {
            work(col, j) *= inv_pivot;
            inverse(col, j) *= inv_pivot;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const Complex factor = work(r, col);
            if (factor == Complex{}) continue;
            for (std::size_t j = 0; j < m; ++j) {
                work(r, j) -= factor * work(col, j);
                inverse(r, j) -= factor * inverse(col, j);
            }
        }
    }
    return matrix_product(conjugate_transpose(a), inverse);
}

NormCertificate minimum_norm_certificate(const ColumnVector& x_p, const ComplexMatrix& projector,
                                         double tol) {
    if (x_p.cols() != 1 || projector.cols() != x_p.rows()) {
        throw std::invalid_argument("minimum_norm_certificate: x_p must be a column vector of length n");
    }
    const double leak = euclidean_norm(matrix_product(projector, x_p));
    NormCertificate certificate;
    certificate.residual = leak / std::max(1.0, euclidean_norm(x_p));
    certificate.holds = leak <= tol * std::max(1.0, euclidean_norm(x_p));
    return certificate;
}

}  // namespace rowsolve
