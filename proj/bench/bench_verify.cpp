// Serial reference vs OpenMP kernel on the verification workloads.

#include <benchmark/benchmark.h>

#include "pqknot/torus.hpp"
#include "pqknot/verify.hpp"

using namespace pqknot;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_DeltaIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta_identity_check(state.range(1), mode(state)));
  set_label(state);
}

void BM_Suite(benchmark::State& state, Suite suite) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, state.range(1), mode(state)).passed());
  set_label(state);
}

}  // namespace

BENCHMARK(BM_DeltaIdentity)->ArgsProduct({{0, 1}, {100, 200}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, recurrence, Suite::recurrence)->ArgsProduct({{0, 1}, {100}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, homfly_factor, Suite::homfly_factor)
    ->ArgsProduct({{0, 1}, {200}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, all, Suite::all)->ArgsProduct({{0, 1}, {100}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
