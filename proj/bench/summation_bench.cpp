#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rvm/summation.hpp"

using namespace rvm;
using summation::Backend;

namespace {

struct Problem {
  summation::SourceSet sources;
  std::vector<Vec2> targets;
  std::vector<double> wall_x1;
};

Problem make_problem(std::size_t n) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0), v(0.0, 1.0);
  Problem p;
  for (std::size_t i = 0; i < n; ++i) {
    p.sources.add({u(gen), v(gen)}, u(gen));
    p.targets.push_back({u(gen), v(gen)});
  }
  for (int i = -60; i <= 60; ++i) p.wall_x1.push_back(0.1 * i);
  return p;
}

template <Backend B>
void BM_Freespace(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  std::vector<Vec2> out(p.targets.size());
  for (auto _ : state) {
    summation::freespace_velocity(B, p.sources, p.targets, 0.05, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["pairs/s"] = benchmark::Counter(
      static_cast<double>(state.range(0)) * static_cast<double>(state.range(0)),
      benchmark::Counter::kIsIterationInvariantRate);
}

template <Backend B>
void BM_Halfplane(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  std::vector<Vec2> out(p.targets.size());
  for (auto _ : state) {
    summation::halfplane_velocity(B, p.sources, p.targets, 0.01, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["pairs/s"] = benchmark::Counter(
      static_cast<double>(state.range(0)) * static_cast<double>(state.range(0)),
      benchmark::Counter::kIsIterationInvariantRate);
}

template <Backend B>
void BM_BoundaryStress(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(p.wall_x1.size());
  for (auto _ : state) {
    summation::boundary_stress(B, p.sources, p.wall_x1, 0.01, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Freespace<Backend::serial>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Freespace<Backend::parallel>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Halfplane<Backend::serial>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Halfplane<Backend::parallel>)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundaryStress<Backend::serial>)->Arg(26042)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundaryStress<Backend::parallel>)->Arg(26042)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
