#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rowsolve/online.hpp"
#include "rowsolve/solver.hpp"
#include "rowsolve/verify.hpp"

using namespace rowsolve;

namespace {

ComplexMatrix bench_matrix(std::size_t m, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex{dist(rng), dist(rng)};
    return a;
}

ColumnVector bench_vector(std::size_t m, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ColumnVector b(m, 1);
    for (std::size_t i = 0; i < m; ++i) b(i, 0) = Complex{dist(rng), dist(rng)};
    return b;
}

}  // namespace

static void BM_TransformRhs(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = bench_matrix(m, m, 1);
    const ColumnVector b = bench_vector(m, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rop_transform_rhs(a, b));
    }
}
BENCHMARK(BM_TransformRhs)->Arg(16)->Arg(64)->Arg(256);

static void BM_Accumulate(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = bench_matrix(m, m, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rop_accumulate(a));
    }
}
BENCHMARK(BM_Accumulate)->Arg(16)->Arg(64)->Arg(256);

static void BM_SolveWithInverse(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = bench_matrix(m, m + m / 2, 4);
    const ColumnVector b = bench_vector(m, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(a, b, Variation::accumulate_m));
    }
}
BENCHMARK(BM_SolveWithInverse)->Arg(16)->Arg(64)->Arg(128);

static void BM_StreamWholeSystem(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = bench_matrix(m, m, 6);
    const ColumnVector b = bench_vector(m, 7);
    for (auto _ : state) {
        StreamingSolver solver(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Complex> row(a.row(i).begin(), a.row(i).end());
            benchmark::DoNotOptimize(solver.ingest_row(row, b(i, 0)));
        }
        benchmark::DoNotOptimize(solver.finalize());
    }
}
BENCHMARK(BM_StreamWholeSystem)->Arg(16)->Arg(64)->Arg(256);

static void BM_OraclePseudoinverse(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = bench_matrix(m, 2 * m, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_pseudoinverse(a));
    }
}
BENCHMARK(BM_OraclePseudoinverse)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
