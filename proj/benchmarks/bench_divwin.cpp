#include <benchmark/benchmark.h>

#include <random>

#include "divwin/arith.hpp"
#include "divwin/bounds.hpp"
#include "divwin/window.hpp"

using namespace divwin;

static void BM_Factorize64(benchmark::State& state) {
    std::mt19937_64 rng(42);
    for (auto _ : state) {
        mpz_class n(rng() >> 8 | 1);
        benchmark::DoNotOptimize(factorize(n));
    }
}
BENCHMARK(BM_Factorize64);

static void BM_FactorizeSemiprime(benchmark::State& state) {
    mpz_class n = mpz_class("1000003") * mpz_class("1000033");
    for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorizeSemiprime);

static void BM_Divisors(benchmark::State& state) {
    FactoredInteger n = factorize(mpz_class(720720));  // tau = 240
    for (auto _ : state) benchmark::DoNotOptimize(divisors(n));
}
BENCHMARK(BM_Divisors);

static void BM_CountWindow(benchmark::State& state) {
    FactoredInteger n = factorize(mpz_class(720720));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_window(n, ExponentWindow{0.5, 0.4}));
}
BENCHMARK(BM_CountWindow);

static void BM_WindowHull(benchmark::State& state) {
    SmallestFactorSieve sieve(100000);
    std::uint32_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponent_window_hull(sieve.factor(n), 0.5, 0.3));
        n = n < 100000 ? n + 1 : 2;
    }
}
BENCHMARK(BM_WindowHull);

static void BM_AlphaOracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_oracle(0.4, 0.18, 1000));
}
BENCHMARK(BM_AlphaOracle);

BENCHMARK_MAIN();
