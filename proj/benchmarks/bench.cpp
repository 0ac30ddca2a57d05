#include <benchmark/benchmark.h>

#include <random>

#include "adaregret/harness.hpp"
#include "adaregret/intervals.hpp"
#include "adaregret/meta.hpp"
#include "adaregret/sacs.hpp"
#include "adaregret/sacs_cpgc.hpp"

using namespace adaregret;

namespace {

Scenario bench_scenario(long horizon) {
  Scenario s;
  s.horizon = horizon;
  s.dimension = 2;
  s.domain = Domain::ball({0.0, 0.0}, 1.0);
  s.stage_starts = {1, horizon / 2 + 1};
  s.stage_targets = {{0.7, 0.2}, {-0.6, -0.3}};
  s.jitter = 0.15;
  s.seed = 99;
  return s;
}

void bm_cover_query(benchmark::State& state) {
  const long T = state.range(0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> pick(1, T);
  for (auto _ : state) {
    long r = pick(rng), s = pick(rng);
    if (r > s) std::swap(r, s);
    benchmark::DoNotOptimize(cgc_cover(r, s));
  }
}
BENCHMARK(bm_cover_query)->Arg(1 << 12)->Arg(1 << 16);

void bm_meta_weights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::vector<ExpertStats> experts(n);
  for (auto& e : experts)
    for (int j = 0; j < 50; ++j) e.update(u(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalized_weights(experts));
  }
}
BENCHMARK(bm_meta_weights)->Arg(4)->Arg(12)->Arg(24);

void bm_sacs_round(benchmark::State& state) {
  const long T = state.range(0);
  Scenario s = bench_scenario(T);
  std::vector<LossFunction> losses = generate_scenario(s);
  for (auto _ : state) {
    Sacs learner(s.domain, 1.0);
    double total = 0.0;
    for (long t = 1; t <= T; ++t) total += learner.round(losses[t - 1]).loss;
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(bm_sacs_round)->Arg(512)->Arg(2048);

void bm_sacs_cpgc_round(benchmark::State& state) {
  const long T = state.range(0);
  Scenario s = bench_scenario(T);
  std::vector<LossFunction> losses = generate_scenario(s);
  for (auto _ : state) {
    SacsCpgc learner(s.domain, 1.0, 0.25);
    double total = 0.0;
    for (long t = 1; t <= T; ++t) total += learner.round(losses[t - 1]).loss;
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(bm_sacs_cpgc_round)->Arg(512)->Arg(2048);

void bm_comparator_oracle(benchmark::State& state) {
  Scenario s = bench_scenario(4096);
  std::vector<Vec> targets = scenario_targets(s);
  ComparatorOracle oracle(targets, s.domain);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pick(1, 4096);
  for (auto _ : state) {
    long r = pick(rng), q = pick(rng);
    if (r > q) std::swap(r, q);
    benchmark::DoNotOptimize(oracle.best(r, q));
  }
}
BENCHMARK(bm_comparator_oracle);

}  // namespace

BENCHMARK_MAIN();
