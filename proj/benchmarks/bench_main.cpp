#include <benchmark/benchmark.h>

#include <cstdint>

#include "stateprep/analytics.hpp"
#include "stateprep/exponent_count.hpp"
#include "stateprep/exponents.hpp"
#include "stateprep/ghz.hpp"
#include "stateprep/schedule.hpp"
#include "stateprep/simulate.hpp"

namespace {

using namespace stateprep;

ErrorTerms device_like_terms() {
  ErrorTerms t;
  t.p_s = 0.99975;
  t.p_is = 0.99975;
  t.p_d = 0.9906;
  t.p_id = 0.995;
  t.p_m = 0.984;
  t.p_im = 0.9902;
  t.p_ic = 0.9902;
  return t;
}

void BM_ScheduleAndCountGhzAdaptive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Circuit c = build_ghz(n, GhzVariant::Adaptive);
    const ExponentVector counted = count_exponents(schedule(c));
    benchmark::DoNotOptimize(counted);
  }
}
BENCHMARK(BM_ScheduleAndCountGhzAdaptive)->Arg(16)->Arg(64);

void BM_WCompositionAudit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const BlockComparison cmp = w_adaptive_comparison(n);
    benchmark::DoNotOptimize(cmp);
  }
}
BENCHMARK(BM_WCompositionAudit)->Arg(16)->Arg(64);

void BM_NoisyShotsGhzLinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = build_ghz(n, GhzVariant::Linear);
  const ErrorTerms terms = device_like_terms();
  std::uint64_t seed = 7;
  for (auto _ : state) {
    const NoisyReport report = sample_noisy(c, terms, 64, seed++);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_NoisyShotsGhzLinear)->Arg(10)->Arg(20);

void BM_EnumerateBranchesGhzAdaptive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = build_ghz(n, GhzVariant::Adaptive);
  for (auto _ : state) {
    const auto branches = enumerate_branches(c);
    benchmark::DoNotOptimize(branches);
  }
}
BENCHMARK(BM_EnumerateBranchesGhzAdaptive)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
