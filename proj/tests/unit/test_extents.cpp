#include <doctest.h>

#include <cmath>
#include <numbers>

#include "johncut/extents.h"
#include "johncut/fixtures.h"
#include "support.h"

using namespace johncut;

TEST_SUITE("extents") {

TEST_CASE("directional extents of the 4x1 rectangle") {
  Polygon P = rect(4, 1);
  CHECK(directional_extent(P, 0.0) == doctest::Approx(4.0));
  CHECK(directional_extent(P, 0.5 * std::numbers::pi) == doctest::Approx(1.0));
  const ExtentResult e = min_max_extent(P);
  CHECK(e.min_extent == doctest::Approx(1.0));
  CHECK(e.max_extent == doctest::Approx(std::sqrt(17.0)));
}

TEST_CASE("l-shape extents come from its hull") {
  const ExtentResult e = min_max_extent(l_shape_poly());
  CHECK(e.min_extent == doctest::Approx(2.0));
  CHECK(e.max_extent == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("convex hull drops interior and collinear points") {
  std::vector<Vec2> hull =
      convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}, {0.5, 0.5}});
  CHECK(hull.size() == 4);
}

TEST_CASE("extents are rigid-motion invariant") {
  Polygon P = blob(5);
  const ExtentResult e0 = min_max_extent(P);
  CHECK(e0.min_extent <= e0.max_extent);
  Polygon Q = transformed(P, 0.83, {7.5, -3.25});
  const ExtentResult e1 = min_max_extent(Q);
  CHECK(e1.min_extent == doctest::Approx(e0.min_extent).epsilon(1e-9));
  CHECK(e1.max_extent == doctest::Approx(e0.max_extent).epsilon(1e-9));
}

TEST_CASE("extents computed on the polygon match its hull") {
  Polygon P = l_shape_poly();
  Polygon H = Polygon::validate(convex_hull(P.verts()));
  for (double ang : {0.0, 0.3, 1.1, 2.9})
    CHECK(directional_extent(P, ang) == doctest::Approx(directional_extent(H, ang)));
}

TEST_CASE("euclidean diameter of the unit square is the diagonal") {
  CHECK(euclidean_diameter(unit_square().verts()) == doctest::Approx(std::sqrt(2.0)));
}

}
