#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rowsolve/complex_matrix.hpp"
#include "rowsolve/row_orthonormalize.hpp"
#include "rowsolve/solver.hpp"

namespace rowsolve {

/// What one ingested row contributed to the solution.
struct Increment {
    std::size_t index = 0;       // 0-based arrival position of the row
    ColumnVector x_p_inc;        // n x 1; zero for zero rows
    std::optional<ComplexMatrix> g_inc;  // n x rows_seen; present when tracking G
    bool was_zero_row = false;
    bool inconsistency_detected = false;
};

/// Streaming solver: rows of [A | b] arrive one at a time and the
/// minimum-norm solution accrues as a sum of mutually orthogonal
/// increments, so ||x_p|| never decreases as data arrives.
///
/// Each new row is projected against every finalized row (classical
/// Gram-Schmidt, which is what makes already-finalized rows immutable);
/// the batch path uses modified Gram-Schmidt. The two orders agree in
/// exact arithmetic.
///
/// Single-owner mutable state: one ingest at a time. A quiescent state may
/// be inspected or moved across threads freely.
class StreamingSolver {
public:
    /// n: column count (>= 1). eps_rel: relative zero-row threshold.
    /// track_g: also accrue the generalized inverse. reorth: run the
    /// projection pass twice per row, which tightens orthogonality on
    /// ill-conditioned streams at double the projection cost.
    explicit StreamingSolver(std::size_t n, double eps_rel = default_eps_rel,
                             bool track_g = false, bool reorth = false);

    /// Feeds the next row of [A | b]. Throws std::invalid_argument on a
    /// length mismatch or non-finite input.
    Increment ingest_row(std::span<const Complex> a_row, Complex b_entry);

    struct Estimate {
        ColumnVector x_p;
        std::size_t rank = 0;
        double norm = 0.0;
    };
    Estimate current_estimate() const;

    /// Assembles the same SolveResult the batch solver would produce for
    /// the rows seen so far (within roundoff). With no rows ingested the
    /// result is the zero solution with projector I_n.
    SolveResult finalize() const;

    std::size_t columns() const noexcept { return n_; }
    std::size_t rows_seen() const noexcept { return rows_seen_; }
    std::size_t rank() const noexcept { return finalized_.size(); }

    /// ||x_p|| after each ingested row; starts at {0}. Non-decreasing.
    const std::vector<double>& norm_history() const noexcept { return norm_history_; }

private:
    struct FinalizedRow {
        std::size_t position;           // arrival index
        std::vector<Complex> unit_row;  // length n
        Complex b_value;                // transformed rhs entry
    };
    struct ZeroRow {
        std::size_t position;
        Complex residual;  // leftover rhs after projection; consistency evidence
    };

    std::size_t n_;
    double eps_rel_;
    bool track_g_;
    bool reorth_;
    std::vector<FinalizedRow> finalized_;
    std::vector<ZeroRow> zero_rows_;
    std::vector<std::vector<Complex>> m_rows_;  // per arrival index; width = index + 1
    std::vector<Complex> x_p_accum_;
    std::vector<double> norm_history_;
    std::size_t rows_seen_ = 0;
    RowOpLog log_;
};

}  // namespace rowsolve
