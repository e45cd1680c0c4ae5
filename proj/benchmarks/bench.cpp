#include <benchmark/benchmark.h>

#include "noonsim/analytic.hpp"
#include "noonsim/breakeven.hpp"
#include "noonsim/fock.hpp"
#include "noonsim/montecarlo.hpp"

using namespace noonsim;

static void BM_LossChannel(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto rho = fock::noon_state(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::loss_channel(rho, 0.6, Arm::one));
  }
}
BENCHMARK(BM_LossChannel)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

static void BM_OracleNoonStats(benchmark::State& state) {
  const int n = int(state.range(0));
  const ChannelPair ch(0.6, 0.1, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::oracle_noon_stats(n, ch, 0.7));
  }
}
BENCHMARK(BM_OracleNoonStats)->Arg(2)->Arg(4)->Arg(6);

static void BM_NoonPhaseError(benchmark::State& state) {
  const ChannelPair ch(0.6, 0.1, 0.0);
  double phi = 0.0;
  for (auto _ : state) {
    phi += 1e-6;
    benchmark::DoNotOptimize(analytic::noon_phase_error(4, ch, phi));
  }
}
BENCHMARK(BM_NoonPhaseError);

static void BM_BreakevenAlpha2(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(breakeven::breakeven_alpha2(n, 0.9));
  }
}
BENCHMARK(BM_BreakevenAlpha2)->Arg(2)->Arg(10);

static void BM_SampleShots(benchmark::State& state) {
  const ChannelPair ch(0.6, 0.1, 0.0);
  const auto probs = montecarlo::outcome_probabilities(
      Method::noon, 2, ch, montecarlo::operating_point(Method::noon, 2, ch));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        montecarlo::sample_outcomes(probs, 1, state.range(0), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleShots)->Arg(10000);

BENCHMARK_MAIN();
