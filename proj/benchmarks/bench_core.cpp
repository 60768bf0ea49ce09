#include "troplab/bbs.hpp"
#include "troplab/eigenmap.hpp"
#include "troplab/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using troplab::ConservedVector;
using troplab::Rational;

ConservedVector curve_of_genus(int g) {
  switch (g) {
    case 1:
      return ConservedVector({8, 3, 0});
    case 2:
      return ConservedVector({7, 3, 1, 0});
    default:
      return ConservedVector({13, 6, 3, 1, 0});
  }
}

void BM_Evolve(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto s = troplab::random_state(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(troplab::evolve(s));
}
BENCHMARK(BM_Evolve)->DenseRange(1, 6);

void BM_Conserved(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto s = troplab::random_state(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(troplab::conserved(s));
}
BENCHMARK(BM_Conserved)->DenseRange(1, 6);

void BM_EnumerateIsolevel(benchmark::State& state) {
  const auto C = curve_of_genus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(troplab::enumerate_isolevel(C));
}
BENCHMARK(BM_EnumerateIsolevel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateBBS(benchmark::State& state) {
  const std::vector<std::int64_t> lambda{1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(troplab::enumerate_bbs(13, lambda));
}
BENCHMARK(BM_EnumerateBBS)->Unit(benchmark::kMillisecond);

void BM_Pi(benchmark::State& state) {
  const auto C = curve_of_genus(static_cast<int>(state.range(0)));
  const troplab::Jacobian jac(troplab::CurveModel::build(C));
  const auto states = troplab::enumerate_isolevel(C);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(troplab::pi(jac, states[i++ % states.size()]));
}
BENCHMARK(BM_Pi)->DenseRange(1, 3);

void BM_EtaInjectivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(troplab::run_check("eta-injectivity-on-Dg"));
}
BENCHMARK(BM_EtaInjectivity)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
