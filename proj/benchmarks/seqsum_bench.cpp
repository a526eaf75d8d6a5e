#include <benchmark/benchmark.h>

#include "seqsum/amortized.hpp"
#include "seqsum/cost_model.hpp"
#include "seqsum/oracle.hpp"

using namespace seqsum;

namespace {

RunOptions untraced() {
  RunOptions o;
  o.trace_threshold = 0;
  return o;
}

// Steps per second should stay flat as k grows if the run is linear.
void BM_CounterRun(benchmark::State& state) {
  const SeqSumMachine m = build_machine(2);
  const Instance inst = gen_counter(static_cast<std::size_t>(state.range(0)));
  std::uint64_t steps = 0;
  for (auto _ : state) {
    const RunReport r = run_seqsum(m, inst, untraced());
    steps = r.total_steps;
    benchmark::DoNotOptimize(steps);
  }
  state.counters["t"] = static_cast<double>(steps);
  state.counters["n"] = static_cast<double>(size_params(inst).n);
  state.SetItemsProcessed(static_cast<std::int64_t>(steps) * state.iterations());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CounterRun)->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_AdversarialRun(benchmark::State& state) {
  const SeqSumMachine m = build_machine(2);
  const Instance inst = gen_adversarial(static_cast<std::size_t>(state.range(0)));
  RunReport r;
  for (auto _ : state) {
    r = run_seqsum(m, inst, untraced());
    benchmark::DoNotOptimize(r.total_steps);
  }
  state.counters["t"] = static_cast<double>(r.total_steps);
  state.counters["naive"] = static_cast<double>(naive_bound(r));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AdversarialRun)->RangeMultiplier(2)->Range(1 << 8, 1 << 15)->Complexity(benchmark::oN);

void BM_RandomRunBase(benchmark::State& state) {
  const int base = static_cast<int>(state.range(0));
  const SeqSumMachine m = build_machine(base);
  const Instance inst = gen_random(200, 50, base, 17);
  for (auto _ : state) benchmark::DoNotOptimize(run_seqsum(m, inst, untraced()).total_steps);
}
BENCHMARK(BM_RandomRunBase)->Arg(2)->Arg(10)->Arg(36);

// Full trace retention versus aggregates only.
void BM_TracedRun(benchmark::State& state) {
  const SeqSumMachine m = build_machine(2);
  const Instance inst = gen_random(100, 40, 2, 3);
  RunOptions opts;
  opts.trace_threshold = state.range(0) != 0 ? 1'000'000 : 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_seqsum(m, inst, opts).total_steps);
}
BENCHMARK(BM_TracedRun)->Arg(0)->Arg(1);

void BM_OracleSum(benchmark::State& state) {
  const Instance inst = gen_random(static_cast<std::size_t>(state.range(0)), 50, 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sum(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleSum)->RangeMultiplier(4)->Range(16, 4096);

void BM_BuildMachine(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_machine(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildMachine)->Arg(2)->Arg(36);

}  // namespace

BENCHMARK_MAIN();
