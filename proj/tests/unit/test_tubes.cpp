#include <doctest.h>

#include <random>

#include "johncut/tubes.h"
#include "support.h"

using namespace johncut;

TEST_SUITE("tubes") {

TEST_CASE("cigar membership on the horizontal two-segment") {
  const Vec2 a{0, 0}, b{2, 0};
  CHECK(cigar_membership(a, b, 0.5, {1, 0.4}));      // midpoint ball has radius 0.5
  CHECK_FALSE(cigar_membership(a, b, 0.5, {0.2, 0.2}));
  CHECK_FALSE(cigar_membership(a, b, 0.5, {0, 0}));  // open set, endpoint ball degenerates
  CHECK(cigar_membership_closed(a, b, 0.5, {0, 0}));
}

TEST_CASE("cigar is symmetric in its endpoints and under midpoint reflection") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng) + 2.0, u(rng)};
    const double eta = 0.05 + 0.4 * (u(rng) + 1.0);
    const Vec2 x{u(rng) + 1.0, u(rng)};
    const bool m = cigar_membership(a, b, eta, x);
    CHECK(m == cigar_membership(b, a, eta, x));
    CHECK(m == cigar_membership(a, b, eta, a + b - x));  // point reflection through the midpoint
  }
}

TEST_CASE("carrot membership grows with arclength") {
  const std::vector<Vec2> curve{{0, 0}, {1, 0}};
  CHECK(carrot_membership(curve, 0.5, {0.5, 0.2}));
  CHECK_FALSE(carrot_membership(curve, 0.5, {0, 0.1}));
  CHECK(carrot_membership(curve, 0.5, {1, 0}));  // center at the far endpoint
}

TEST_CASE("carrot membership is monotone in the opening") {
  const std::vector<Vec2> curve{{0, 0}, {0.7, 0.3}, {1.2, 0.1}};
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.4, 1.6);
  for (int k = 0; k < 200; ++k) {
    const Vec2 x{u(rng), u(rng)};
    if (carrot_membership(curve, 0.2, x)) CHECK(carrot_membership(curve, 0.4, x));
  }
}

TEST_CASE("tube parameter domain is validated") {
  try {
    cigar_membership({0, 0}, {1, 0}, 1.5, {0.5, 0});
    FAIL("eta above one accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidEta);
  }
  try {
    carrot_membership({}, 0.5, {0, 0});
    FAIL("empty curve accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyCurve);
  }
}

TEST_CASE("visible region of a chord in the l-shape") {
  Polygon P = l_shape_poly();
  const Segment vw{{1, 1}, {1, 0}};
  CHECK(visible_region_membership(P, vw, 0.3, {1.05, 0.5}));
  // Far outside the closed cigar: radius at the midpoint is only 0.15.
  CHECK_FALSE(visible_region_membership(P, vw, 0.3, {1.5, 0.5}));
}

TEST_CASE("visible region respects occlusion behind a hooked wall") {
  // Wall [3,3.2]x[0,2.8] with a lip to x=3.8; the pocket point under the
  // lip is inside the cigar of the high chord but no sight segment from
  // the chord reaches it.
  Polygon P = Polygon::validate({{0, 0},
                                 {3, 0},
                                 {3, 2.8},
                                 {3.8, 2.8},
                                 {3.8, 2.6},
                                 {3.2, 2.6},
                                 {3.2, 0},
                                 {6, 0},
                                 {6, 4},
                                 {0, 4}});
  const Segment vw{{0, 3.5}, {6, 3.5}};
  REQUIRE(P.contains_segment(vw.a, vw.b));
  const Vec2 pocket{3.3, 2.55};
  REQUIRE(P.strictly_contains(pocket));
  REQUIRE(cigar_membership_closed(vw.a, vw.b, 0.4, pocket));
  CHECK_FALSE(visible_region_membership(P, vw, 0.4, pocket));
  // Control point at the same depth, right of the lip, is visible.
  CHECK(visible_region_membership(P, vw, 0.4, {4.2, 2.8}));
}

TEST_CASE("visible region requires the chord inside the polygon") {
  Polygon P = l_shape_poly();
  try {
    visible_region_membership(P, {{2, 1}, {1, 2}}, 0.3, {1.5, 0.5});
    FAIL("chord outside accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SegmentNotInPolygon);
  }
}

}
