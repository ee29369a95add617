#include "rowsolve/online.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rowsolve {

StreamingSolver::StreamingSolver(std::size_t n, double eps_rel, bool track_g, bool reorth)
    : n_(n), eps_rel_(eps_rel), track_g_(track_g), reorth_(reorth), x_p_accum_(n, Complex{}) {
    if (n == 0) {
        throw std::invalid_argument("StreamingSolver: column count must be >= 1");
    }
    if (eps_rel < 0.0 || !std::isfinite(eps_rel)) {
        throw std::invalid_argument("StreamingSolver: eps_rel must be finite and >= 0");
    }
    norm_history_.push_back(0.0);
}

Increment StreamingSolver::ingest_row(std::span<const Complex> a_row, Complex b_entry) {
    if (a_row.size() != n_) {
        throw std::invalid_argument("ingest_row: expected " + std::to_string(n_) +
                                    " entries, got " + std::to_string(a_row.size()));
    }
    for (const Complex& z : a_row) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ingest_row: row entries must be finite");
        }
    }
    if (!std::isfinite(b_entry.real()) || !std::isfinite(b_entry.imag())) {
        throw std::invalid_argument("ingest_row: rhs entry must be finite");
    }

    const std::size_t position = rows_seen_;
    std::vector<Complex> row(a_row.begin(), a_row.end());
    const double input_norm = euclidean_norm(std::span<const Complex>(row));
    const double input_b_mag = std::abs(b_entry);

    std::vector<Complex> m_row;
    if (track_g_) {
        m_row.assign(position + 1, Complex{});
        m_row[position] = Complex{1.0, 0.0};
    }

    // Classical Gram-Schmidt: project against every finalized row, with the
    // identical coefficient applied to the rhs (and M) channel. An optional
    // second pass sweeps out the orthogonality loss of the first.
    const int passes = reorth_ ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
        for (const FinalizedRow& f : finalized_) {
            const Complex prod =
                inner_product(std::span<const Complex>(row), std::span<const Complex>(f.unit_row));
            for (std::size_t j = 0; j < n_; ++j) row[j] -= f.unit_row[j] * prod;
            b_entry -= f.b_value * prod;
            if (track_g_) {
                const std::vector<Complex>& source = m_rows_[f.position];
                for (std::size_t j = 0; j < source.size(); ++j) m_row[j] -= source[j] * prod;
            }
            log_.steps.push_back(OrthogonalizeStep{position, f.position, prod});
        }
    }

    Increment increment{position, ColumnVector(n_, 1), std::nullopt, false, false};

    const double mag = euclidean_norm(std::span<const Complex>(row));
    const double threshold = eps_rel_ * std::max(1.0, input_norm);
    if (mag > threshold) {
        for (Complex& z : row) z /= mag;
        b_entry /= mag;
        if (track_g_) {
            for (Complex& z : m_row) z /= mag;
        }
        log_.steps.push_back(NormalizeStep{position, mag});
        for (std::size_t j = 0; j < n_; ++j) {
            increment.x_p_inc(j, 0) = std::conj(row[j]) * b_entry;
        }
        if (track_g_) {
            ComplexMatrix g_inc(n_, position + 1);
            for (std::size_t j = 0; j < n_; ++j) {
                const Complex col = std::conj(row[j]);
                for (std::size_t k = 0; k <= position; ++k) g_inc(j, k) = col * m_row[k];
            }
            increment.g_inc = std::move(g_inc);
        }
        finalized_.push_back(FinalizedRow{position, std::move(row), b_entry});
    } else {
        log_.steps.push_back(SkipZeroStep{position});
        increment.was_zero_row = true;
        increment.inconsistency_detected =
            std::abs(b_entry) > eps_rel_ * std::max(1.0, input_b_mag);
        if (track_g_) {
            increment.g_inc = ComplexMatrix(n_, position + 1);  // zero column of (A')^*
        }
        zero_rows_.push_back(ZeroRow{position, b_entry});
    }
    if (track_g_) {
        m_rows_.push_back(std::move(m_row));
    }

    for (std::size_t j = 0; j < n_; ++j) x_p_accum_[j] += increment.x_p_inc(j, 0);
    norm_history_.push_back(euclidean_norm(std::span<const Complex>(x_p_accum_)));
    ++rows_seen_;
    return increment;
}

StreamingSolver::Estimate StreamingSolver::current_estimate() const {
    Estimate estimate{ColumnVector(n_, 1), finalized_.size(),
                      euclidean_norm(std::span<const Complex>(x_p_accum_))};
    for (std::size_t j = 0; j < n_; ++j) estimate.x_p(j, 0) = x_p_accum_[j];
    return estimate;
}

SolveResult StreamingSolver::finalize() const {
    SolveResult result{ColumnVector(n_, 1), finalized_.size(), true, std::nullopt,
                       ComplexMatrix::identity(n_), std::nullopt, std::nullopt, log_};
    for (std::size_t j = 0; j < n_; ++j) result.x_p(j, 0) = x_p_accum_[j];
    if (rows_seen_ == 0) {
        return result;  // zero solution, projector I_n, vacuously consistent
    }

    // Reconstruct [A' | b'] with exact zero rows at the skipped positions,
    // then lean on the batch helpers so both paths share one definition of
    // projector and consistency.
    const std::size_t m = rows_seen_;
    ComplexMatrix a_prime(m, n_);
    ColumnVector b_prime(m, 1);
    std::vector<std::size_t> members;
    members.reserve(finalized_.size());
    for (const FinalizedRow& f : finalized_) {
        for (std::size_t j = 0; j < n_; ++j) a_prime(f.position, j) = f.unit_row[j];
        b_prime(f.position, 0) = f.b_value;
        members.push_back(f.position);
    }
    for (const ZeroRow& z : zero_rows_) {
        b_prime(z.position, 0) = z.residual;
    }
    QuasiOrthonormalRows q{std::move(a_prime), IndexSet{std::move(members)}};

    result.projector = null_projector(q);
    const ConsistencyReport consistency = consistency_check(q, b_prime, eps_rel_);
    result.consistent = consistency.consistent;
    result.offending_row = consistency.offending_row;

    if (track_g_) {
        ComplexMatrix m_factor(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::vector<Complex>& row = m_rows_[i];
            for (std::size_t j = 0; j < row.size(); ++j) m_factor(i, j) = row[j];
        }
        result.g = generalized_inverse(q, m_factor);
        result.m_factor = std::move(m_factor);
    }
    return result;
}

}  // namespace rowsolve
