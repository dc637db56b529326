#include <doctest.h>

#include <cmath>
#include <random>

#include "geodesic_oracle.h"
#include "johncut/extents.h"
#include "johncut/fixtures.h"
#include "johncut/geodesic.h"
#include "support.h"

using namespace johncut;

namespace {

Vec2 random_interior(const Polygon& P, std::mt19937& rng) {
  std::uniform_real_distribution<double> ux(P.bbox().lo.x, P.bbox().hi.x);
  std::uniform_real_distribution<double> uy(P.bbox().lo.y, P.bbox().hi.y);
  for (;;) {
    const Vec2 p{ux(rng), uy(rng)};
    if (P.strictly_contains(p)) return p;
  }
}

}  // namespace

TEST_SUITE("geodesic") {

TEST_CASE("convex paths are straight") {
  Polygon P = unit_square();
  const GeodesicPath g = geodesic_distance(P, {0.1, 0.1}, {0.9, 0.9});
  CHECK(g.length == doctest::Approx(0.8 * std::sqrt(2.0)));
  CHECK(g.waypoints.size() == 2);
}

TEST_CASE("l-shape path bends at the concave corner") {
  Polygon P = l_shape_poly();
  const GeodesicPath g = geodesic_distance(P, {1.9, 0.9}, {0.9, 1.9});
  CHECK(g.length == doctest::Approx(2.0 * std::sqrt(0.82)));
  REQUIRE(g.waypoints.size() == 3);
  CHECK(g.waypoints[1].x == doctest::Approx(1.0));
  CHECK(g.waypoints[1].y == doctest::Approx(1.0));
  CHECK(g.t.back() == doctest::Approx(g.length));
  CHECK(oracle_geodesic(P, {1.9, 0.9}, {0.9, 1.9}) == doctest::Approx(g.length).epsilon(1e-6));
}

TEST_CASE("short straight hops stay straight") {
  const GeodesicPath g = geodesic_distance(l_shape_poly(), {1.5, 0.5}, {1.5, 0.6});
  CHECK(g.length == doctest::Approx(0.1));
  CHECK(g.waypoints.size() == 2);
}

TEST_CASE("endpoints outside the polygon are rejected") {
  try {
    geodesic_distance(unit_square(), {2, 2}, {0.5, 0.5});
    FAIL("outside start accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PointOutside);
  }
}

TEST_CASE("intrinsic diameter witnesses") {
  CHECK(intrinsic_diameter(unit_square()).d == doctest::Approx(std::sqrt(2.0)));
  CHECK(intrinsic_diameter(rect(4, 1)).d == doctest::Approx(std::sqrt(17.0)));
  const DiameterResult r = intrinsic_diameter(l_shape_poly());
  CHECK(r.d == doctest::Approx(2.0 * std::sqrt(2.0)));
  const bool pair_matches = (dist(r.a, {2, 0}) < 1e-9 && dist(r.b, {0, 2}) < 1e-9) ||
                            (dist(r.a, {0, 2}) < 1e-9 && dist(r.b, {2, 0}) < 1e-9);
  CHECK(pair_matches);
}

TEST_CASE("distance to a segment") {
  Polygon S = unit_square();
  CHECK(geodesic_distance_to_segment(S, {0.5, 0.5}, {{0, 0}, {1, 0}}) == doctest::Approx(0.5));
  CHECK(geodesic_distance_to_segment(S, {0.5, 0}, {{0, 0}, {1, 0}}) == doctest::Approx(0.0));

  // The straight horizontal segment to the left wall stays inside the arm,
  // so the distance is plain Euclidean; the dense oracle agrees.
  Polygon P = l_shape_poly();
  const Segment left{{0, 2}, {0, 0}};
  const double d = geodesic_distance_to_segment(P, {1.9, 0.9}, left);
  double oracle = std::numeric_limits<double>::max();
  for (int i = 0; i <= 256; ++i) {
    const Vec2 s{0.0, 2.0 * i / 256.0};
    oracle = std::min(oracle, oracle_geodesic(P, {1.9, 0.9}, s, 64));
  }
  CHECK(d == doctest::Approx(1.9));
  CHECK(d == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("geodesics match the dense oracle on bent fixtures") {
  std::mt19937 rng(3);
  for (const Polygon& P : {l_shape_poly(), comb(3), notched_rect(0.1), spiral(4)}) {
    for (int k = 0; k < 12; ++k) {
      const Vec2 p = random_interior(P, rng);
      const Vec2 q = random_interior(P, rng);
      const double got = geodesic_distance(P, p, q).length;
      const double want = oracle_geodesic(P, p, q, 256);
      CHECK(got == doctest::Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("metric properties hold on random triples") {
  std::mt19937 rng(5);
  Polygon P = comb(3);
  for (int k = 0; k < 25; ++k) {
    const Vec2 a = random_interior(P, rng);
    const Vec2 b = random_interior(P, rng);
    const Vec2 c = random_interior(P, rng);
    const double ab = geodesic_distance(P, a, b).length;
    const double bc = geodesic_distance(P, b, c).length;
    const double ac = geodesic_distance(P, a, c).length;
    CHECK(ac <= ab + bc + 1e-9);
    CHECK(ab + 1e-12 >= dist(a, b));
    if (P.contains_segment(a, b)) CHECK(ab == doctest::Approx(dist(a, b)));
  }
}

TEST_CASE("diameter is at most half the boundary length") {
  for (const Polygon& P :
       {unit_square(), l_shape_poly(), comb(4), notched_rect(0.1), spiral(4), koch_variant(2)})
    CHECK(intrinsic_diameter(P).d <= 0.5 * P.boundary_length() + 1e-9);
}

TEST_CASE("convex diameter equals the caliper diameter at hull vertices") {
  for (unsigned seed : {1u, 2u, 3u}) {
    Polygon P = random_convex(seed);
    const DiameterResult r = intrinsic_diameter(P);
    CHECK(r.d == doctest::Approx(min_max_extent(P).max_extent).epsilon(1e-9));
    CHECK(P.vertex_near(r.a) >= 0);
    CHECK(P.vertex_near(r.b) >= 0);
  }
}

}
