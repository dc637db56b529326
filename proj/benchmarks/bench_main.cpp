#include <benchmark/benchmark.h>

#include "johncut/fixtures.h"
#include "johncut/geodesic.h"
#include "johncut/john.h"
#include "johncut/rotund.h"
#include "johncut/semiconvex.h"

using namespace johncut;

namespace {

void BM_GeodesicDistance(benchmark::State& state) {
  const Polygon P = spiral(static_cast<int>(state.range(0)));
  const Vec2 p = P.interior_point();
  const Vec2 q = inscribed_disk(P).center;
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_distance(P, p, q).length);
}
BENCHMARK(BM_GeodesicDistance)->Arg(2)->Arg(4)->Arg(8);

void BM_IntrinsicDiameter(benchmark::State& state) {
  const Polygon P = koch_variant(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_diameter(P).d);
}
BENCHMARK(BM_IntrinsicDiameter)->Arg(1)->Arg(2)->Arg(3);

void BM_InscribedDisk(benchmark::State& state) {
  const Polygon P = blob(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inscribed_disk(P).radius);
}
BENCHMARK(BM_InscribedDisk)->Arg(1)->Arg(7);

void BM_CertifySemiconvex(benchmark::State& state) {
  const Polygon P = comb(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_semiconvex(P, 0.025).pass);
}
BENCHMARK(BM_CertifySemiconvex)->Arg(3)->Arg(5);

void BM_DecomposePolygon(benchmark::State& state) {
  const Polygon P = make_fixture([&] {
    FixtureSpec s;
    s.kind = state.range(0) == 0 ? "notched-rect" : "spiral";
    s.turns = 8;
    return s;
  }());
  for (auto _ : state) benchmark::DoNotOptimize(decompose_polygon(P, 0.25).partition.pieces.size());
}
BENCHMARK(BM_DecomposePolygon)->Arg(0)->Arg(1);

void BM_CertifyJohn(benchmark::State& state) {
  const Polygon P = l_shape();
  JohnConfig cfg;
  cfg.n_points = static_cast<int>(state.range(0));
  cfg.carrot_samples = 500;
  for (auto _ : state) benchmark::DoNotOptimize(certify_john(P, 0.15, cfg).pass);
}
BENCHMARK(BM_CertifyJohn)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
