#include "guekdv/gue/wick.hpp"
#include "guekdv/kdv/pdo.hpp"
#include "guekdv/limit/okounkov.hpp"
#include "guekdv/parallel.hpp"
#include "guekdv/toda/gue_resolvent.hpp"
#include "guekdv/toda/resolvent.hpp"

#include <benchmark/benchmark.h>

using namespace guekdv;

namespace {

void BM_WickFullCorrelator(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0)) / 2;
  const gue::IndexMultiset i{half, half};
  set_worker_count(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    gue::clear_correlator_caches();
    benchmark::DoNotOptimize(gue::full_correlator(i, {gue::kWickHardCap}));
  }
  set_worker_count(1);
}
BENCHMARK(BM_WickFullCorrelator)->Args({10, 1})->Args({12, 1})->Args({14, 1})->Args({14, 4})->Unit(benchmark::kMillisecond);

void BM_ConnectedRecursion(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gue::clear_correlator_caches();
    benchmark::DoNotOptimize(gue::map_count_recursive(1, gue::IndexMultiset{t / 2 - 1, t / 2 + 1}));
  }
}
BENCHMARK(BM_ConnectedRecursion)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ResolventOnePoint(benchmark::State& state) {
  const int i_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toda::onepoint_correlators_via_resolvent(i_max, 1));
}
BENCHMARK(BM_ResolventOnePoint)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AbstractResolvent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toda::resolvent(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AbstractResolvent)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_KdvFlow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kdv::kdv_flow_rhs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KdvFlow)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_OkounkovGenus0(benchmark::State& state) {
  gue::MapCounter counter;
  const Rat kappa(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit::okounkov_scaled_value(0, {Rat(1, 2), Rat(3, 2)}, kappa, counter));
  }
}
BENCHMARK(BM_OkounkovGenus0)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
