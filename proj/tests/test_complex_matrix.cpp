#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rowsolve/complex_matrix.hpp"
#include "test_support.hpp"

using namespace rowsolve;
using test_support::golden_a_prime;
using test_support::kSqrt5;
using test_support::max_abs_diff;
using test_support::random_matrix;

TEST_CASE("inner product conjugates the second argument") {
    const std::vector<Complex> u{{0, 2}, {1, 0}, {-1, 0}};
    const std::vector<Complex> v{{0, 0}, {0, -1}, {0, 0}};
    const Complex p = inner_product(u, v);
    CHECK(p.real() == 0.0);
    CHECK(p.imag() == doctest::Approx(1.0));

    // swapping the arguments conjugates the result
    const Complex q = inner_product(v, u);
    CHECK(q.real() == doctest::Approx(p.real()));
    CHECK(q.imag() == doctest::Approx(-p.imag()));
}

TEST_CASE("inner product unit self-product") {
    const std::vector<Complex> e1{{1, 0}, {0, 0}, {0, 0}};
    CHECK(inner_product(e1, e1) == Complex{1.0, 0.0});
}

TEST_CASE("inner product against a normalized row") {
    const std::vector<Complex> u{{0, 4}, {0, 0}, {-2, 0}};
    const std::vector<Complex> v{{0, 2 / kSqrt5}, {0, 0}, {-1 / kSqrt5, 0}};
    const Complex p = inner_product(u, v);
    CHECK(p.real() == doctest::Approx(2 * kSqrt5).epsilon(1e-14));
    CHECK(p.imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("inner product rejects length mismatch") {
    const std::vector<Complex> u{{1, 0}};
    const std::vector<Complex> v{{1, 0}, {2, 0}};
    CHECK_THROWS_AS((void)inner_product(u, v), std::invalid_argument);
}

TEST_CASE("euclidean norm") {
    CHECK(euclidean_norm(std::vector<Complex>{{0, 0}, {0, -3}, {0, 0}}) == 3.0);
    CHECK(euclidean_norm(std::vector<Complex>{{0, 0}, {0, 0}, {0, 0}}) == 0.0);
    CHECK(euclidean_norm(std::vector<Complex>{{0, 2}, {0, 0}, {-1, 0}}) ==
          doctest::Approx(kSqrt5).epsilon(1e-15));
}

TEST_CASE("conjugate transpose") {
    const ComplexMatrix single{{Complex{0, 1}}};
    CHECK(conjugate_transpose(single)(0, 0) == Complex{0, -1});

    const ComplexMatrix eye = ComplexMatrix::identity(3);
    CHECK(max_abs_diff(conjugate_transpose(eye), eye) == 0.0);

    // columns of the transpose are conjugated rows
    const ComplexMatrix ap = golden_a_prime();
    const ComplexMatrix aps = conjugate_transpose(ap);
    REQUIRE(aps.rows() == 3);
    REQUIRE(aps.cols() == 3);
    CHECK(aps(0, 1) == Complex{0, -2 / kSqrt5});
    CHECK(aps(1, 0) == Complex{0, 1});
    CHECK(aps(2, 1) == Complex{-1 / kSqrt5, 0});

    std::mt19937 rng(7);
    const ComplexMatrix q = random_matrix(4, 6, rng);
    CHECK(max_abs_diff(conjugate_transpose(conjugate_transpose(q)), q) == 0.0);
}

TEST_CASE("matrix product") {
    std::mt19937 rng(11);
    const ComplexMatrix q = random_matrix(2, 5, rng);
    CHECK(max_abs_diff(ComplexMatrix::identity(2) * q, q) == 0.0);

    // the orthonormalized golden rows satisfy A'(A')^* = diag(1, 1, 0)
    const ComplexMatrix ap = golden_a_prime();
    const ComplexMatrix gram = ap * conjugate_transpose(ap);
    ComplexMatrix expected(3, 3);
    expected(0, 0) = expected(1, 1) = Complex{1, 0};
    CHECK(max_abs_diff(gram, expected) <= 1e-15);

    const ComplexMatrix zero(3, 2);
    CHECK(max_abs(zero * random_matrix(2, 4, rng)) == 0.0);

    CHECK_THROWS_AS(random_matrix(2, 3, rng) * random_matrix(2, 3, rng), std::invalid_argument);
}

TEST_CASE("construction validates shape and finiteness") {
    CHECK_THROWS_AS(ComplexMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(1, 2, {Complex{1, 0}}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{nan, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(column_vector({Complex{0, 1.0 / 0.0}}), std::invalid_argument);
}

TEST_CASE("algebraic properties on random data") {
    std::mt19937 rng(1234);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<Complex> u(n), v(n);
        for (std::size_t j = 0; j < n; ++j) {
            u[j] = {dist(rng), dist(rng)};
            v[j] = {dist(rng), dist(rng)};
        }
        const Complex uu = inner_product(u, u);
        CHECK(uu.imag() == 0.0);
        CHECK(uu.real() >= 0.0);
        const double norm = euclidean_norm(u);
        CHECK(uu.real() == doctest::Approx(norm * norm).epsilon(1e-13));

        const Complex uv = inner_product(u, v);
        const Complex vu = inner_product(v, u);
        CHECK(std::abs(uv - std::conj(vu)) <= 1e-13);
    }

    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng() % 6;
        const std::size_t k = 1 + rng() % 6;
        const std::size_t n = 1 + rng() % 6;
        const ComplexMatrix p = random_matrix(m, k, rng);
        const ComplexMatrix q = random_matrix(k, n, rng);
        CHECK(max_abs_diff(conjugate_transpose(p * q),
                           conjugate_transpose(q) * conjugate_transpose(p)) <= 1e-13);
    }
}
