#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>

#include "mertens_ap/analytic.hpp"
#include "mertens_ap/characters.hpp"
#include "mertens_ap/selberg.hpp"
#include "mertens_ap/sieve.hpp"

using namespace mertens_ap;

static void BM_SieveSegment(benchmark::State& state)
{
    const std::int64_t len = state.range(0);
    const std::int64_t lo = 1'000'000'000;
    for (auto _ : state) {
        auto seg = sieve_segment(lo, lo + len - 1, state.range(1) != 0);
        benchmark::DoNotOptimize(seg.mu.data());
    }
    state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_SieveSegment)->Args({1 << 16, 0})->Args({1 << 16, 1})->Args({1 << 20, 1});

static void BM_Mertens(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(mertens(state.range(0)));
}
BENCHMARK(BM_Mertens)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_EvalL(benchmark::State& state)
{
    const auto chi = character_from_label(state.range(0) == 1 ? "1:" : "4:1");
    const cplx s{0.5, static_cast<double>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_L(s, chi));
}
BENCHMARK(BM_EvalL)->Args({1, 20})->Args({1, 1000})->Args({4, 20})->Args({4, 1000});

static void BM_BeurlingH(benchmark::State& state)
{
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(beurling_H(cplx{x, 0.3}));
        x += 1e-3;
    }
}
BENCHMARK(BM_BeurlingH);

static void BM_FourierF(benchmark::State& state)
{
    const SelbergPair p{2.0, 8.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(fourier_F(p, Sign::plus, 1.3));
}
BENCHMARK(BM_FourierF)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
