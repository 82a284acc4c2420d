#include <benchmark/benchmark.h>

#include "cabounds/bounds.hpp"
#include "cabounds/construct.hpp"
#include "cabounds/verify.hpp"

using namespace cabounds;

static void BM_CountUncovered(benchmark::State& state) {
  const CAParams p(4, static_cast<unsigned>(state.range(0)), 3);
  const SymbolArray a = random_array(p, 400, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_uncovered(a));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.column_set_count()));
}
BENCHMARK(BM_CountUncovered)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_FullCheck(benchmark::State& state) {
  const CAParams p(4, static_cast<unsigned>(state.range(0)), 3);
  const SymbolArray a = random_array(p, 400, 1);
  for (auto _ : state) benchmark::DoNotOptimize(full_check(a).uncovered_count);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.column_set_count()));
}
BENCHMARK(BM_FullCheck)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_Build(benchmark::State& state) {
  const auto strategy = static_cast<Strategy>(state.range(0));
  const CAParams p(3, 20, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build(strategy, p).array.rows());
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_Build)
    ->Arg(static_cast<int>(Strategy::two_stage))
    ->Arg(static_cast<int>(Strategy::mt_cyclic))
    ->Arg(static_cast<int>(Strategy::mt_frobenius))
    ->Arg(static_cast<int>(Strategy::pgl))
    ->Unit(benchmark::kMillisecond);

static void BM_Bounds(benchmark::State& state) {
  const auto method = static_cast<BoundMethod>(state.range(0));
  const CAParams p(6, 54, 3);
  BoundOptions options;
  options.arbitrary_precision = true;
  for (auto _ : state) benchmark::DoNotOptimize(compute_bound(method, p, options).value);
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Bounds)
    ->Arg(static_cast<int>(BoundMethod::slj))
    ->Arg(static_cast<int>(BoundMethod::discrete_slj))
    ->Arg(static_cast<int>(BoundMethod::two_stage))
    ->Arg(static_cast<int>(BoundMethod::gss_lll))
    ->Arg(static_cast<int>(BoundMethod::conditional_lll));
BENCHMARK_MAIN();
