#include <benchmark/benchmark.h>

#include <random>

#include "zeon/calculus.hpp"
#include "zeon/combinat.hpp"
#include "zeon/entangle.hpp"
#include "zeon/states.hpp"

using namespace zeon;

namespace {

Zeon random_zeon(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    const Context ctx(n);
    std::vector<Complex> c(ctx.size());
    for (auto& x : c) x = Complex(d(rng), d(rng));
    return Zeon(ctx, std::move(c));
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(d(rng), d(rng));
    return m;
}

void BM_MultiplySubmask(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Zeon f = random_zeon(n, 1), g = random_zeon(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply_submask(f, g));
}

void BM_MultiplyRanked(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Zeon f = random_zeon(n, 1), g = random_zeon(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply_ranked(f, g));
}

void BM_Exp(benchmark::State& state) {
    const Zeon f = random_zeon(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(exp(f));
}

void BM_PermanentRyser(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(m));
}

void BM_PermanentGaussian(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_permanent(m));
}

void BM_Invariants4(benchmark::State& state) {
    const Zeon f = states::phi_tilde(-1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lmn_invariants(f));
        benchmark::DoNotOptimize(monotones(f));
    }
}

void BM_FactorTest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Zeon f = random_zeon(n, 5);
    const auto splits = all_bipartitions(n);
    for (auto _ : state)
        for (const auto& s : splits) benchmark::DoNotOptimize(factor_test(f, s));
}

}  // namespace

BENCHMARK(BM_MultiplySubmask)->DenseRange(4, 14, 2);
BENCHMARK(BM_MultiplyRanked)->DenseRange(4, 14, 2);
BENCHMARK(BM_Exp)->DenseRange(4, 12, 4);
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 8, 2);
BENCHMARK(BM_PermanentGaussian)->DenseRange(2, 6, 2);
BENCHMARK(BM_Invariants4);
BENCHMARK(BM_FactorTest)->DenseRange(3, 6, 1);
BENCHMARK_MAIN();
