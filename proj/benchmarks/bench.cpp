#include "ston/homotopy.hpp"
#include "ston/oracle.hpp"
#include "ston/sampler.hpp"
#include "ston/ston.hpp"

#include "scenes.hpp"

#include <benchmark/benchmark.h>

namespace
{
using namespace ston;

std::vector<Point> obstacle_cloud(std::size_t n)
{
  ston::testing::Rng rng(n);
  std::vector<Point> pts(n);
  for (auto & p : pts)
    p = {ston::testing::uniform(rng, 0, 1), ston::testing::uniform(rng, 0, 1)};
  return pts;
}

Triangle query_at(ston::testing::Rng & rng)
{
  Point const a{ston::testing::uniform(rng, 0, 1), ston::testing::uniform(rng, 0, 1)};
  return {a, a + Point{0.02, 0.003}, a + Point{0.01, 0.02}};
}

void BM_QueryTriangle(benchmark::State & state)
{
  ObstacleSet const os(obstacle_cloud(static_cast<std::size_t>(state.range(0))));
  ston::testing::Rng rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(os.query_triangle(query_at(rng)));
}
BENCHMARK(BM_QueryTriangle)->RangeMultiplier(10)->Range(100, 100000);

void BM_QueryTriangleLinear(benchmark::State & state)
{
  ObstacleSet const os(obstacle_cloud(static_cast<std::size_t>(state.range(0))));
  ston::testing::Rng rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::query_triangle(os, query_at(rng)));
}
BENCHMARK(BM_QueryTriangleLinear)->RangeMultiplier(10)->Range(100, 100000);

ston::testing::RandomScene const & dense_scene()
{
  static auto const scene = [] {
    ston::testing::Rng rng(99);
    return ston::testing::random_dense_scene(rng, 60, 80, 150, 400);
  }();
  return scene;
}

void BM_Sweep(benchmark::State & state)
{
  auto const & scene = dense_scene();
  ObstacleSet const os(scene.obstacles);
  StonParams const p = tighten_defaults();
  for (auto _ : state)
  {
    StringConfig cfg{scene.sampled, false};
    benchmark::DoNotOptimize(sweep(cfg, os, p, 0));
  }
  state.counters["processors"] = static_cast<double>(scene.sampled.size());
}
BENCHMARK(BM_Sweep);

void BM_Signature(benchmark::State & state)
{
  auto const & scene = dense_scene();
  ObstacleSet const os(scene.obstacles);
  for (auto _ : state)
    benchmark::DoNotOptimize(signature(scene.sampled, os));
}
BENCHMARK(BM_Signature);

void BM_TightenDense(benchmark::State & state)
{
  auto const & scene = dense_scene();
  ObstacleSet const os(scene.obstacles);
  StonParams p = tighten_defaults();
  p.homotopy_guard = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(tighten({scene.sampled, false}, os, p));
}
BENCHMARK(BM_TightenDense)->Unit(benchmark::kMillisecond);

void BM_ConvexHull(benchmark::State & state)
{
  auto const pts = obstacle_cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(10)->Range(100, 100000);
}  // namespace

BENCHMARK_MAIN();
