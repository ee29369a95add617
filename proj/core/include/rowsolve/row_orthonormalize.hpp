#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "rowsolve/complex_matrix.hpp"

namespace rowsolve {

/// Relative zero-norm threshold used when a caller does not supply one.
/// A row is treated as zero when its norm after orthogonalization drops to
/// eps_rel * max(1, norm of the row as it entered the procedure). Passing 0
/// keeps only rows that cancel exactly, which reproduces exact-arithmetic
/// behavior on exact inputs.
inline constexpr double default_eps_rel = 1e-10;

/// Sorted set of 0-based row indices; identifies the nonzero rows left by
/// the orthonormalization. Its size equals rank(A).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> members);

    bool contains(std::size_t index) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<std::size_t>& members() const noexcept { return members_; }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

private:
    std::vector<std::size_t> members_;  // sorted, unique
};

/// Row_i <- Row_i / magnitude (applied to the rhs / factor channel as well).
struct NormalizeStep {
    std::size_t row;
    double magnitude;
};

/// Row_target <- Row_target - coefficient * Row_source (both channels).
struct OrthogonalizeStep {
    std::size_t target;
    std::size_t source;
    Complex coefficient;
};

/// Row_row pinned to exact zeros; no companion-channel effect.
struct SkipZeroStep {
    std::size_t row;
};

using RowOp = std::variant<NormalizeStep, OrthogonalizeStep, SkipZeroStep>;

/// Ordered record of every row operation performed. Replaying the log
/// against the original input reproduces the transformed matrix exactly,
/// which makes intermediate states auditable step by step.
struct RowOpLog {
    std::vector<RowOp> steps;
};

/// Applies a single logged operation to `a` (and to `b` for the overload
/// carrying a right-hand side).
void apply_row_op(const RowOp& op, ComplexMatrix& a);
void apply_row_op(const RowOp& op, ComplexMatrix& a, ColumnVector& b);

/// Replays a full log against a copy of the original matrix.
ComplexMatrix replay(const RowOpLog& log, ComplexMatrix a);

/// Output contract of the orthonormalization: rows listed in `w` are unit
/// length and mutually orthogonal; all other rows are exactly zero.
struct QuasiOrthonormalRows {
    ComplexMatrix a_prime;
    IndexSet w;
};

struct RhsTransformResult {
    QuasiOrthonormalRows q;
    ColumnVector b_prime;
    RowOpLog log;
};

struct AccumulateResult {
    QuasiOrthonormalRows q;
    ComplexMatrix m_factor;  // m x m, nonsingular; m_factor * A == a_prime
    RowOpLog log;
};

/// First variation: orthonormalizes the rows of A, applying every row
/// operation to b as well, so A x = b becomes A' x = b'. Modified
/// Gram-Schmidt order: each row is normalized, then immediately projected
/// out of all later rows.
RhsTransformResult rop_transform_rhs(const ComplexMatrix& a, const ColumnVector& b,
                                     double eps_rel = default_eps_rel);

/// Second variation: same row schedule, but the operations accumulate into
/// an m x m factor M (started at identity), so A x = b becomes A' x = M b.
/// Useful when several right-hand sides will be solved against one A.
AccumulateResult rop_accumulate(const ComplexMatrix& a, double eps_rel = default_eps_rel);

/// Diagonal 0/1 matrix with ones exactly at the indices in w.
/// For the producing A' it satisfies A' (A')^* == index_matrix(w, m).
ComplexMatrix index_matrix(const IndexSet& w, std::size_t m);

struct QuasiOrthonormalCheck {
    bool ok;
    std::string first_violation;  // empty when ok
};

/// True iff every row norm is within tol of 1 or of 0 and all pairs of
/// near-unit rows have |inner_product| <= tol.
QuasiOrthonormalCheck is_quasi_orthonormal(const ComplexMatrix& q, double tol);

/// One elementary m x m factor per non-skip log entry: a Normalize step
/// becomes identity with (i, i) = 1/magnitude, an Orthogonalize step
/// becomes identity with (target, source) = -coefficient. Their ordered
/// product (last factor leftmost) equals the accumulated M.
std::vector<ComplexMatrix> materialize_elementary_factors(const RowOpLog& log, std::size_t m);

}  // namespace rowsolve
