#include <doctest.h>

#include <cmath>
#include <numbers>

#include "johncut/fixtures.h"
#include "johncut/polygon.h"
#include "support.h"

using namespace johncut;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("polygon") {

TEST_CASE("unit square validates with area one and boundary four") {
  Polygon P = unit_square();
  CHECK(P.size() == 4);
  CHECK(P.area() == doctest::Approx(1.0));
  CHECK(P.boundary_length() == doctest::Approx(4.0));
  CHECK(P.is_convex());
}

TEST_CASE("l-shape has one concave vertex with angle 3pi/2") {
  Polygon P = l_shape_poly();
  CHECK(P.area() == doctest::Approx(3.0));
  CHECK(P.boundary_length() == doctest::Approx(8.0));
  REQUIRE(P.concave_indices().size() == 1);
  const int ci = P.concave_indices()[0];
  CHECK(P[ci].x == doctest::Approx(1.0));
  CHECK(P[ci].y == doctest::Approx(1.0));
  CHECK(P.interior_angle(ci) == doctest::Approx(1.5 * kPi));
}

TEST_CASE("bowtie is rejected as self-intersecting") {
  try {
    Polygon::validate({{0, 0}, {4, 0}, {1, 2}, {3, 2}});
    FAIL("bowtie accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SelfIntersecting);
  }
}

TEST_CASE("degenerate inputs are rejected") {
  try {
    Polygon::validate({{0, 0}, {1, 0}});
    FAIL("two points accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TooFewVertices);
  }
  try {
    Polygon::validate({{0, 0}, {1, 0}, {2, 0}});
    FAIL("collinear ring accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::DegenerateArea);
  }
}

TEST_CASE("clockwise rings are reversed and duplicates collapsed") {
  Polygon P = Polygon::validate({{0, 0}, {0, 1}, {1, 1}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(P.size() == 4);
  CHECK(P.area() == doctest::Approx(1.0));
  CHECK(signed_area(P.verts()) > 0.0);
}

TEST_CASE("shoelace reversal negates the signed area") {
  std::vector<Vec2> ring = l_shape_poly().verts();
  const double a = signed_area(ring);
  std::vector<Vec2> rev(ring.rbegin(), ring.rend());
  CHECK(signed_area(rev) == doctest::Approx(-a));
}

TEST_CASE("interior angles sum to (n-2) pi") {
  for (const Polygon& P : {l_shape_poly(), notched_rect(0.1), comb(3), random_convex(9)}) {
    double sum = 0.0;
    for (int i = 0; i < P.size(); ++i) sum += P.interior_angle(i);
    CHECK(sum == doctest::Approx((P.size() - 2) * kPi).epsilon(1e-9));
  }
}

TEST_CASE("segment containment in the l-shape") {
  Polygon P = l_shape_poly();
  CHECK(P.contains_segment({0.5, 0.5}, {1.5, 0.5}));
  CHECK_FALSE(P.contains_segment({2, 1}, {1, 2}));  // midpoint (1.5,1.5) outside
  CHECK(unit_square().contains_segment({0, 0}, {1, 1}));
}

TEST_CASE("containment predicates agree on boundary and interior") {
  Polygon P = unit_square();
  CHECK(P.contains({0.5, 0.5}));
  CHECK(P.strictly_contains({0.5, 0.5}));
  CHECK(P.contains({0, 0.5}));
  CHECK_FALSE(P.strictly_contains({0, 0.5}));
  CHECK(P.on_boundary({0, 0.5}));
  CHECK_FALSE(P.contains({1.5, 0.5}));
  CHECK(P.boundary_distance({0.5, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("boundary parametrization walks the ring by arclength") {
  Polygon P = unit_square();
  const Vec2 a = P.boundary_point(0.5);
  CHECK(a.x == doctest::Approx(0.5));
  CHECK(a.y == doctest::Approx(0.0));
  const Vec2 b = P.boundary_point(2.5);
  CHECK(b.x == doctest::Approx(0.5));
  CHECK(b.y == doctest::Approx(1.0));
  CHECK(P.cumulative_length(2) == doctest::Approx(2.0));
}

TEST_CASE("interior point is strictly inside") {
  for (const Polygon& P : {unit_square(), l_shape_poly(), comb(4), spiral(4)})
    CHECK(P.strictly_contains(P.interior_point()));
}

TEST_CASE("ring equality is cyclic") {
  std::vector<Vec2> a{{0, 0}, {1, 0}, {1, 1}};
  std::vector<Vec2> b{{1, 1}, {0, 0}, {1, 0}};
  CHECK(rings_cyclically_equal(a, b, 1e-12));
  std::vector<Vec2> c{{1, 1}, {1, 0}, {0, 0}};
  CHECK_FALSE(rings_cyclically_equal(a, c, 1e-12));
}

}
