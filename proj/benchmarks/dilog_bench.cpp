#include <benchmark/benchmark.h>

#include "dilog/lucas/lucas.hpp"
#include "dilog/rogers/dilog.hpp"
#include "dilog/series/lucas_series.hpp"
#include "dilog/series/theorem.hpp"

namespace {

using namespace dilog;

void BM_RogersRational(benchmark::State& state) {
    const PrecisionBudget b = PrecisionBudget::for_digits(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rogers_l(Rational(2, 7), b));
}
BENCHMARK(BM_RogersRational)->Arg(20)->Arg(50)->Arg(200);

void BM_RogersGolden(benchmark::State& state) {
    const PrecisionBudget b = PrecisionBudget::for_digits(50);
    const QuadraticElement x(Rational(-1, 2), Rational(1, 2), 5);
    for (auto _ : state) benchmark::DoNotOptimize(rogers_l(x, b));
}
BENCHMARK(BM_RogersGolden);

void BM_LucasFastDoubling(benchmark::State& state) {
    const LucasParams p = LucasParams::rational(1, -1);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_uv_rational(p, n));
}
BENCHMARK(BM_LucasFastDoubling)->Range(64, 1 << 16);

void BM_LucasNaive(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_uv_naive(Rational(1), Rational(-1), n));
}
BENCHMARK(BM_LucasNaive)->Range(64, 1 << 12);

void BM_TheoremVerify(benchmark::State& state) {
    VerifyOptions o;
    o.digits = static_cast<int>(state.range(0));
    const TwoParamInstance inst(Rational(1, 2), Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(theorem_main_verify(inst, o));
}
BENCHMARK(BM_TheoremVerify)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_LucasNegVerify(benchmark::State& state) {
    VerifyOptions o;
    o.digits = 40;
    const LucasParams p = LucasParams::rational(1, -1);
    for (auto _ : state) benchmark::DoNotOptimize(lucas_neg_verify(p, 1, o));
}
BENCHMARK(BM_LucasNegVerify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
