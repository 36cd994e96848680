#include <benchmark/benchmark.h>

#include "wix/represent.hpp"
#include "wix/series.hpp"
#include "wix/term.hpp"
#include "wix/zeta.hpp"

namespace {

const char* kWorkedTerm = "D(D(D(D(c)*c*D(c)))*c3)";

void BM_EvalSeries(benchmark::State& state) {
    const wix::Term t = wix::parse_term(kWorkedTerm);
    for (auto _ : state) benchmark::DoNotOptimize(wix::eval_series(t));
}
BENCHMARK(BM_EvalSeries);

void BM_FromPoset(benchmark::State& state) {
    const wix::Poset p = wix::eval_poset(wix::parse_term("D(D(c*c))*c"));
    for (auto _ : state) benchmark::DoNotOptimize(wix::from_poset(p));
}
BENCHMARK(BM_FromPoset);

void BM_EnumerateTerms(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wix::enumerate_terms(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_EnumerateTerms)->Arg(4)->Arg(6);

void BM_Represent(benchmark::State& state) {
    const wix::ChainSeries f = wix::eval_series(wix::parse_term("D(D(c)*c)*c"));
    for (auto _ : state) benchmark::DoNotOptimize(wix::represent(f));
}
BENCHMARK(BM_Represent);

void BM_ZetaTail(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(wix::zeta_tail(2, 1e-12L));
}
BENCHMARK(BM_ZetaTail);

void BM_CountLinearExtensions(benchmark::State& state) {
    const wix::Poset p = wix::eval_poset(wix::parse_term("D(c*c)*D(c)"));
    for (auto _ : state) benchmark::DoNotOptimize(wix::count_linear_extensions(p));
}
BENCHMARK(BM_CountLinearExtensions);

}  // namespace

BENCHMARK_MAIN();
