#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rowsolve/row_orthonormalize.hpp"
#include "test_support.hpp"

using namespace rowsolve;
using namespace test_support;

namespace {

// Independent rank oracle: row echelon form with partial pivoting. Shares
// nothing with the orthonormalization kernel.
std::size_t gauss_rank(ComplexMatrix a, double rel_tol = 1e-9) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const double scale = max_abs(a);
    if (scale == 0.0) return 0;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        double best = std::abs(a(row, col));
        for (std::size_t r = row + 1; r < m; ++r) {
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                pivot = r;
            }
        }
        if (best <= rel_tol * scale) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(row, j), a(pivot, j));
        }
        for (std::size_t r = row + 1; r < m; ++r) {
            const Complex factor = a(r, col) / a(row, col);
            for (std::size_t j = 0; j < n; ++j) a(r, j) -= factor * a(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

ColumnVector golden_b() { return golden_rhs(); }

}  // namespace

TEST_CASE("transform-rhs reproduces the golden trace at eps = 0") {
    // This input cancels exactly in double precision, so the strict zero
    // threshold still detects the dependent third row.
    const RhsTransformResult t = rop_transform_rhs(golden_matrix(), golden_b(), 0.0);
    CHECK(max_abs_diff(t.q.a_prime, golden_a_prime()) <= 1e-14);
    CHECK(max_abs_diff(t.b_prime, golden_b_prime()) <= 1e-14);
    CHECK(t.q.w.members() == std::vector<std::size_t>{0, 1});

    // same outcome under the default relative threshold
    const RhsTransformResult d = rop_transform_rhs(golden_matrix(), golden_b());
    CHECK(max_abs_diff(d.q.a_prime, golden_a_prime()) <= 1e-14);
    CHECK(d.q.w.size() == 2);
}

TEST_CASE("transform-rhs leaves an orthonormal input untouched") {
    const ComplexMatrix eye = ComplexMatrix::identity(3);
    const ColumnVector b = column_vector({Complex{1, 0}, Complex{2, 0}, Complex{3, 0}});
    const RhsTransformResult t = rop_transform_rhs(eye, b);
    CHECK(max_abs_diff(t.q.a_prime, eye) == 0.0);
    CHECK(max_abs_diff(t.b_prime, b) == 0.0);
    CHECK(t.q.w.size() == 3);
}

TEST_CASE("transform-rhs on duplicated rows") {
    const ComplexMatrix a{{Complex{1, 0}, Complex{0, 0}}, {Complex{1, 0}, Complex{0, 0}}};
    const ColumnVector b = column_vector({Complex{1, 0}, Complex{1, 0}});
    const RhsTransformResult t = rop_transform_rhs(a, b);
    const ComplexMatrix expected{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{0, 0}}};
    CHECK(max_abs_diff(t.q.a_prime, expected) == 0.0);
    CHECK(t.b_prime(0, 0) == Complex{1, 0});
    CHECK(t.b_prime(1, 0) == Complex{0, 0});
    CHECK(t.q.w.members() == std::vector<std::size_t>{0});
}

TEST_CASE("zero-row threshold scales with the incoming row") {
    // badly scaled dependent rows: the projection residual (~1e-8 here) is
    // far above any absolute threshold near machine precision, but the
    // relative test catches it
    const ComplexMatrix a{{Complex{3e8, 0}, Complex{1e8, 0}},
                          {Complex{1e8, 0}, Complex{1e8 / 3.0, 0}}};
    const AccumulateResult t = rop_accumulate(a);
    CHECK(t.q.w.members() == std::vector<std::size_t>{0});
    CHECK(euclidean_norm(t.q.a_prime.row(1)) == 0.0);
}

TEST_CASE("transform-rhs validates the rhs") {
    const ComplexMatrix a = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(rop_transform_rhs(a, ColumnVector(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(rop_transform_rhs(a, ComplexMatrix(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(rop_transform_rhs(a, ColumnVector(2, 1), -1.0), std::invalid_argument);
}

TEST_CASE("accumulate reproduces the golden factor") {
    const AccumulateResult t = rop_accumulate(golden_matrix(), 0.0);
    CHECK(max_abs_diff(t.q.a_prime, golden_a_prime()) <= 1e-14);
    CHECK(max_abs_diff(t.m_factor, golden_m_factor()) <= 1e-14);
    CHECK(t.q.w.members() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("accumulate trivial cases") {
    const ComplexMatrix eye = ComplexMatrix::identity(4);
    const AccumulateResult t = rop_accumulate(eye);
    CHECK(max_abs_diff(t.m_factor, eye) == 0.0);

    const ComplexMatrix a{{Complex{2, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{0, 0}}};
    const AccumulateResult s = rop_accumulate(a);
    const ComplexMatrix a_expected{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{0, 0}}};
    const ComplexMatrix m_expected{{Complex{0.5, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{1, 0}}};
    CHECK(max_abs_diff(s.q.a_prime, a_expected) == 0.0);
    CHECK(max_abs_diff(s.m_factor, m_expected) == 0.0);
    CHECK(s.q.w.members() == std::vector<std::size_t>{0});
}

TEST_CASE("index matrix") {
    const ComplexMatrix two_of_three = index_matrix(IndexSet{{0, 1}}, 3);
    ComplexMatrix expected(3, 3);
    expected(0, 0) = expected(1, 1) = Complex{1, 0};
    CHECK(max_abs_diff(two_of_three, expected) == 0.0);

    CHECK(max_abs(index_matrix(IndexSet{}, 2)) == 0.0);
    CHECK(max_abs_diff(index_matrix(IndexSet{{0, 1, 2}}, 3), ComplexMatrix::identity(3)) == 0.0);
    CHECK_THROWS_AS(index_matrix(IndexSet{{3}}, 3), std::out_of_range);

    // A'(A')^* equals the index matrix of the producing run
    const AccumulateResult t = rop_accumulate(golden_matrix(), 0.0);
    const ComplexMatrix gram = t.q.a_prime * conjugate_transpose(t.q.a_prime);
    CHECK(max_abs_diff(gram, index_matrix(t.q.w, 3)) <= 1e-12);
}

TEST_CASE("quasi-orthonormality predicate") {
    CHECK(is_quasi_orthonormal(golden_a_prime(), 1e-12).ok);
    CHECK(is_quasi_orthonormal(ComplexMatrix::identity(4), 0.0).ok);

    const ComplexMatrix bad{{Complex{1, 0}, Complex{1, 0}}, {Complex{0, 0}, Complex{0, 0}}};
    const QuasiOrthonormalCheck check = is_quasi_orthonormal(bad, 1e-10);
    CHECK_FALSE(check.ok);
    CHECK(check.first_violation.find("row 1") != std::string::npos);

    // unit rows that are not orthogonal
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix oblique{{Complex{1, 0}, Complex{0, 0}}, {Complex{s, 0}, Complex{s, 0}}};
    CHECK_FALSE(is_quasi_orthonormal(oblique, 1e-10).ok);
}

TEST_CASE("elementary factors of the golden run") {
    const AccumulateResult t = rop_accumulate(golden_matrix(), 0.0);
    const std::vector<ComplexMatrix> factors = materialize_elementary_factors(t.log, 3);
    REQUIRE(factors.size() == 5);  // the final skip produces no factor

    ComplexMatrix f1 = ComplexMatrix::identity(3);
    f1(0, 0) = Complex{1.0 / 3.0, 0};
    ComplexMatrix f2 = ComplexMatrix::identity(3);
    f2(1, 0) = Complex{0, -1};
    ComplexMatrix f3 = ComplexMatrix::identity(3);
    f3(2, 0) = Complex{-3, -2};
    ComplexMatrix f4 = ComplexMatrix::identity(3);
    f4(1, 1) = Complex{1.0 / kSqrt5, 0};
    ComplexMatrix f5 = ComplexMatrix::identity(3);
    f5(2, 1) = Complex{-2.0 * kSqrt5, 0};

    CHECK(max_abs_diff(factors[0], f1) <= 1e-15);
    CHECK(max_abs_diff(factors[1], f2) <= 1e-15);
    CHECK(max_abs_diff(factors[2], f3) <= 1e-15);
    CHECK(max_abs_diff(factors[3], f4) <= 1e-15);
    CHECK(max_abs_diff(factors[4], f5) <= 1e-15);

    ComplexMatrix product = ComplexMatrix::identity(3);
    for (const ComplexMatrix& f : factors) product = f * product;
    CHECK(max_abs_diff(product, t.m_factor) <= 1e-14);

    CHECK(materialize_elementary_factors(RowOpLog{}, 3).empty());
}

TEST_CASE("replaying onto a joint [A|b] state validates the rhs shape") {
    ComplexMatrix a = golden_matrix();
    ColumnVector b = golden_rhs();
    ColumnVector wrong(2, 1);
    const RowOp op = NormalizeStep{0, 3.0};
    CHECK_THROWS_AS(apply_row_op(op, a, wrong), std::invalid_argument);
    apply_row_op(op, a, b);
    CHECK(b(0, 0) == Complex{1.0 / 3.0, 0});
    CHECK(a(0, 1) == Complex{0, -1});
}

TEST_CASE("log replay reproduces the transformed matrix exactly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng() % 7;
        const std::size_t n = 1 + rng() % 7;
        ComplexMatrix a = random_matrix(m, n, rng);
        if (trial % 2 == 0) a = force_rank_deficient(std::move(a), rng);
        const AccumulateResult t = rop_accumulate(a);
        const ComplexMatrix replayed = replay(t.log, a);
        CHECK(max_abs_diff(replayed, t.q.a_prime) == 0.0);
    }
}

TEST_CASE("random rows orthonormalize within tolerance") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = 1 + rng() % 8;
        ComplexMatrix a = random_matrix(m, n, rng);
        if (trial % 2 == 0) a = force_rank_deficient(std::move(a), rng);
        const AccumulateResult t = rop_accumulate(a);

        CHECK(is_quasi_orthonormal(t.q.a_prime, 1e-10).ok);
        CHECK(t.q.w.size() == gauss_rank(a));
        CHECK(t.q.w.size() <= std::min(m, n));

        // M A == A' and M is invertible (undo the log backwards)
        CHECK(max_abs_diff(t.m_factor * a, t.q.a_prime) <= 1e-12 * std::max(1.0, max_abs(a)));
        ComplexMatrix m_inverse = ComplexMatrix::identity(m);
        for (auto it = t.log.steps.rbegin(); it != t.log.steps.rend(); ++it) {
            if (const auto* nrm = std::get_if<NormalizeStep>(&*it)) {
                for (Complex& z : m_inverse.row(nrm->row)) z *= nrm->magnitude;
            } else if (const auto* ortho = std::get_if<OrthogonalizeStep>(&*it)) {
                auto src = m_inverse.row(ortho->source);
                auto dst = m_inverse.row(ortho->target);
                for (std::size_t j = 0; j < m; ++j) dst[j] += src[j] * ortho->coefficient;
            }
        }
        CHECK(max_abs_diff(t.m_factor * m_inverse, ComplexMatrix::identity(m)) <= 1e-10);
    }
}

TEST_CASE("both variations walk the same schedule") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = 1 + rng() % 8;
        ComplexMatrix a = random_matrix(m, n, rng);
        if (trial % 2 == 0) a = force_rank_deficient(std::move(a), rng);
        const ColumnVector b = random_vector(m, rng);

        const RhsTransformResult t1 = rop_transform_rhs(a, b);
        const AccumulateResult t2 = rop_accumulate(a);
        CHECK(max_abs_diff(t1.q.a_prime, t2.q.a_prime) == 0.0);
        CHECK(t1.q.w.members() == t2.q.w.members());
        CHECK(t1.log.steps.size() == t2.log.steps.size());

        // b' from variation 1 equals M b from variation 2
        CHECK(max_abs_diff(t1.b_prime, t2.m_factor * b) <= 1e-12 * std::max(1.0, max_abs(b)));
    }
}

TEST_CASE("consistent systems keep the rhs inside the index set") {
    // index_matrix(W) b' == b' whenever b is reachable as A x0
    std::mt19937 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + rng() % 6;
        const std::size_t n = 1 + rng() % 6;
        ComplexMatrix a = force_rank_deficient(random_matrix(m, n, rng), rng);
        const ColumnVector x0 = random_vector(n, rng);
        const ColumnVector b = a * x0;
        const RhsTransformResult t = rop_transform_rhs(a, b);
        const ComplexMatrix masked = index_matrix(t.q.w, m) * t.b_prime;
        CHECK(max_abs_diff(masked, t.b_prime) <= 1e-12 * std::max(1.0, max_abs(b)));
    }
}

TEST_CASE("null spaces of A and A' coincide") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + rng() % 6;
        const std::size_t n = 2 + rng() % 6;

        // direction 1: v built from null(A') must satisfy A v = 0
        ComplexMatrix a = force_rank_deficient(random_matrix(m, n, rng), rng);
        const AccumulateResult t = rop_accumulate(a);
        const ComplexMatrix ap = t.q.a_prime;
        const ComplexMatrix p =
            ComplexMatrix::identity(n) - conjugate_transpose(ap) * ap;
        const ColumnVector v = p * random_vector(n, rng);
        const double scale = std::max(1.0, euclidean_norm(v));
        CHECK(euclidean_norm(ap * v) <= 1e-10 * scale);
        CHECK(euclidean_norm(a * v) <= 1e-9 * frobenius_norm(a) * scale);

        // direction 2: a vector annihilated by construction of A must be
        // annihilated by A' too
        std::normal_distribution<double> dist(0.0, 1.0);
        ColumnVector x_null = random_vector(n, rng);
        Complex bilinear{};
        for (std::size_t j = 0; j < n; ++j) bilinear += x_null(j, 0) * x_null(j, 0);
        if (std::abs(bilinear) < 0.1) continue;  // isotropic direction; skip
        ComplexMatrix rows = random_matrix(m, n, rng);
        for (std::size_t i = 0; i < m; ++i) {
            Complex overlap{};
            for (std::size_t j = 0; j < n; ++j) overlap += rows(i, j) * x_null(j, 0);
            const Complex coeff = overlap / bilinear;
            for (std::size_t j = 0; j < n; ++j) rows(i, j) -= coeff * x_null(j, 0);
        }
        CHECK(euclidean_norm(rows * x_null) <= 1e-12 * frobenius_norm(rows) *
                                                   euclidean_norm(x_null));
        const AccumulateResult t2 = rop_accumulate(rows);
        CHECK(euclidean_norm(t2.q.a_prime * x_null) <=
              1e-9 * std::max(1.0, euclidean_norm(x_null)));
    }
}
