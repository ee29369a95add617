#include "rowsolve/row_orthonormalize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rowsolve {

IndexSet::IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IndexSet::contains(std::size_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

namespace {

// Division, not multiplication by the reciprocal: the replay and streaming
// paths must round identically so logs reproduce results bit for bit.
void divide_row(ComplexMatrix& a, std::size_t i, double mag) {
    for (Complex& z : a.row(i)) z /= mag;
}

void subtract_scaled_row(ComplexMatrix& a, std::size_t target, std::size_t source, Complex coeff) {
    auto src = a.row(source);
    auto dst = a.row(target);
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= src[j] * coeff;
}

void check_row_index(std::size_t row, std::size_t m, const char* who) {
    if (row >= m) {
        throw std::out_of_range(std::string(who) + ": row index " + std::to_string(row) +
                                " out of range for " + std::to_string(m) + " rows");
    }
}

// Both variations run this one schedule; the companion receives exactly the
// operations applied to A so the two code paths cannot drift apart.
template <typename Companion>
std::pair<QuasiOrthonormalRows, RowOpLog> run_row_schedule(ComplexMatrix a, double eps_rel,
                                                           Companion&& companion) {
    if (eps_rel < 0.0 || !std::isfinite(eps_rel)) {
        throw std::invalid_argument("row orthonormalization: eps_rel must be finite and >= 0");
    }
    const std::size_t m = a.rows();

    // Zero-norm thresholds are relative to each row as it entered, before
    // any orthogonalization shrank it.
    std::vector<double> threshold(m);
    for (std::size_t i = 0; i < m; ++i) {
        threshold[i] = eps_rel * std::max(1.0, euclidean_norm(a.row(i)));
    }

    RowOpLog log;
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < m; ++i) {
        const double mag = euclidean_norm(a.row(i));
        if (mag > threshold[i]) {
            divide_row(a, i, mag);
            companion.normalize(i, mag);
            log.steps.push_back(NormalizeStep{i, mag});
            nonzero.push_back(i);
            for (std::size_t k = i + 1; k < m; ++k) {
                const Complex prod = inner_product(a.row(k), a.row(i));
                subtract_scaled_row(a, k, i, prod);
                companion.orthogonalize(k, i, prod);
                log.steps.push_back(OrthogonalizeStep{k, i, prod});
            }
        } else {
            // Zero-norm option: pin the row to exact zeros so the index-set
            // identities hold exactly on the output.
            for (Complex& z : a.row(i)) z = Complex{};
            log.steps.push_back(SkipZeroStep{i});
        }
    }
    return {QuasiOrthonormalRows{std::move(a), IndexSet{std::move(nonzero)}}, std::move(log)};
}

struct RhsCompanion {
    ColumnVector& b;
    void normalize(std::size_t i, double mag) { b(i, 0) /= mag; }
    void orthogonalize(std::size_t k, std::size_t i, Complex prod) { b(k, 0) -= b(i, 0) * prod; }
};

struct FactorCompanion {
    ComplexMatrix& m;
    void normalize(std::size_t i, double mag) {
        for (Complex& z : m.row(i)) z /= mag;
    }
    void orthogonalize(std::size_t k, std::size_t i, Complex prod) {
        subtract_scaled_row(m, k, i, prod);
    }
};

}  // namespace

void apply_row_op(const RowOp& op, ComplexMatrix& a) {
    std::visit(
        [&](const auto& step) {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, NormalizeStep>) {
                check_row_index(step.row, a.rows(), "apply_row_op");
                divide_row(a, step.row, step.magnitude);
            } else if constexpr (std::is_same_v<T, OrthogonalizeStep>) {
                check_row_index(step.target, a.rows(), "apply_row_op");
                check_row_index(step.source, a.rows(), "apply_row_op");
                subtract_scaled_row(a, step.target, step.source, step.coefficient);
            } else {
                check_row_index(step.row, a.rows(), "apply_row_op");
                for (Complex& z : a.row(step.row)) z = Complex{};
            }
        },
        op);
}

void apply_row_op(const RowOp& op, ComplexMatrix& a, ColumnVector& b) {
    if (b.cols() != 1 || b.rows() != a.rows()) {
        throw std::invalid_argument("apply_row_op: rhs must be a column vector with one entry per row of A");
    }
    apply_row_op(op, a);
    std::visit(
        [&](const auto& step) {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, NormalizeStep>) {
                b(step.row, 0) /= step.magnitude;
            } else if constexpr (std::is_same_v<T, OrthogonalizeStep>) {
                b(step.target, 0) -= b(step.source, 0) * step.coefficient;
            }
            // SkipZeroStep leaves the rhs residual in place; the consistency
            // check reads it later.
        },
        op);
}

ComplexMatrix replay(const RowOpLog& log, ComplexMatrix a) {
    for (const RowOp& op : log.steps) apply_row_op(op, a);
    return a;
}

RhsTransformResult rop_transform_rhs(const ComplexMatrix& a, const ColumnVector& b, double eps_rel) {
    if (b.cols() != 1) {
        throw std::invalid_argument("rop_transform_rhs: b must be a column vector");
    }
    if (b.rows() != a.rows()) {
        throw std::invalid_argument("rop_transform_rhs: b has " + std::to_string(b.rows()) +
                                    " entries but A has " + std::to_string(a.rows()) + " rows");
    }
    ColumnVector b_prime = b;
    auto [q, log] = run_row_schedule(a, eps_rel, RhsCompanion{b_prime});
    return {std::move(q), std::move(b_prime), std::move(log)};
}

AccumulateResult rop_accumulate(const ComplexMatrix& a, double eps_rel) {
    ComplexMatrix m_factor = ComplexMatrix::identity(a.rows());
    auto [q, log] = run_row_schedule(a, eps_rel, FactorCompanion{m_factor});
    return {std::move(q), std::move(m_factor), std::move(log)};
}

ComplexMatrix index_matrix(const IndexSet& w, std::size_t m) {
    if (m == 0) throw std::invalid_argument("index_matrix: m must be >= 1");
    ComplexMatrix result(m, m);
    for (std::size_t i : w) {
        check_row_index(i, m, "index_matrix");
        result(i, i) = Complex{1.0, 0.0};
    }
    return result;
}

QuasiOrthonormalCheck is_quasi_orthonormal(const ComplexMatrix& q, double tol) {
    std::vector<std::size_t> unit_rows;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        const double mag = euclidean_norm(q.row(i));
        if (std::abs(mag - 1.0) <= tol) {
            unit_rows.push_back(i);
        } else if (mag > tol) {
            return {false, "row " + std::to_string(i + 1) + " has norm " + std::to_string(mag) +
                               ", neither 0 nor 1 within tolerance"};
        }
    }
    for (std::size_t a = 0; a < unit_rows.size(); ++a) {
        for (std::size_t b = a + 1; b < unit_rows.size(); ++b) {
            const double overlap = std::abs(inner_product(q.row(unit_rows[a]), q.row(unit_rows[b])));
            if (overlap > tol) {
                return {false, "rows " + std::to_string(unit_rows[a] + 1) + " and " +
                                   std::to_string(unit_rows[b] + 1) + " have |inner product| " +
                                   std::to_string(overlap)};
            }
        }
    }
    return {true, ""};
}

std::vector<ComplexMatrix> materialize_elementary_factors(const RowOpLog& log, std::size_t m) {
    std::vector<ComplexMatrix> factors;
    for (const RowOp& op : log.steps) {
        if (const auto* n = std::get_if<NormalizeStep>(&op)) {
            check_row_index(n->row, m, "materialize_elementary_factors");
            ComplexMatrix f = ComplexMatrix::identity(m);
            f(n->row, n->row) = Complex{1.0 / n->magnitude, 0.0};
            factors.push_back(std::move(f));
        } else if (const auto* o = std::get_if<OrthogonalizeStep>(&op)) {
            check_row_index(o->target, m, "materialize_elementary_factors");
            check_row_index(o->source, m, "materialize_elementary_factors");
            ComplexMatrix f = ComplexMatrix::identity(m);
            f(o->target, o->source) = -o->coefficient;
            factors.push_back(std::move(f));
        }
        // SkipZeroStep is not an elementary row operation and yields no factor.
    }
    return factors;
}

}  // namespace rowsolve
