#include <benchmark/benchmark.h>

#include <vector>

#include "geobary/barycenter.hpp"
#include "geobary/convexity.hpp"
#include "geobary/spaces.hpp"

using namespace geobary;

namespace {

Space space_for(int kind) {
  switch (kind) {
    case 0:
      return make_euclidean(3);
    case 1:
      return make_hyperbolic();
    case 2:
      return make_star_tree(3);
    default:
      return make_lp_plane(4);
  }
}

Measure measure_for(const Space& s, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(s->sample_point(rng));
  return make_uniform_measure(s, std::move(atoms));
}

void BM_Distance(benchmark::State& state) {
  const Space s = space_for(static_cast<int>(state.range(0)));
  Rng rng(1);
  std::vector<Point> pts;
  for (int i = 0; i < 256; ++i) pts.push_back(s->sample_point(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(s, pts[i & 255], pts[(i + 1) & 255]));
    ++i;
  }
  state.SetLabel(s.name());
}
BENCHMARK(BM_Distance)->DenseRange(0, 3);

void BM_Midpoint(benchmark::State& state) {
  const Space s = space_for(static_cast<int>(state.range(0)));
  Rng rng(2);
  const Point x = s->sample_point(rng), y = s->sample_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(midpoint(s, x, y));
  state.SetLabel(s.name());
}
BENCHMARK(BM_Midpoint)->DenseRange(0, 3);

void BM_Solve(benchmark::State& state) {
  const Space s = space_for(static_cast<int>(state.range(0)));
  const Measure P = measure_for(s, static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve(s, P, P.atom(0)));
  state.SetLabel(s.name());
}
BENCHMARK(BM_Solve)->ArgsProduct({{0, 1, 2, 3}, {2, 8, 20}})->Unit(benchmark::kMillisecond);

void BM_PhiEstimate(benchmark::State& state) {
  const Space s = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_estimate(s, 1.0, 1.0, 1000, 4));
  state.SetLabel(s.name());
}
BENCHMARK(BM_PhiEstimate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
