#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "johncut/errors.h"
#include "johncut/extents.h"
#include "johncut/fixtures.h"
#include "johncut/rotund.h"
#include "support.h"

using namespace johncut;

TEST_SUITE("rotund") {

TEST_CASE("inscribed disk of simple shapes") {
  const Disk ds = inscribed_disk(unit_square());
  CHECK(ds.radius == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(dist(ds.center, {0.5, 0.5}) < 1e-4);

  const Disk dr = inscribed_disk(rect(4, 1));
  CHECK(dr.radius == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(dr.center.y == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(dr.center.x >= 0.5 - 1e-4);
  CHECK(dr.center.x <= 3.5 + 1e-4);

  // Nonconvex search refines on a grid: near-optimal, never overshooting.
  Polygon L = l_shape_poly();
  const Disk dl = inscribed_disk(L);
  const double lstar = 2.0 - std::sqrt(2.0);
  CHECK(dl.radius <= lstar + 1e-9);
  CHECK(dl.radius >= 0.97 * lstar);
  CHECK(dist(dl.center, {lstar, lstar}) < 0.05);
  CHECK(L.boundary_distance(dl.center) >= dl.radius - 1e-7);
}

TEST_CASE("rotund certificates compare radius to intrinsic diameter") {
  const RotundCert cs = certify_rotund(unit_square(), 0.35);
  CHECK(cs.pass);
  CHECK(cs.disk.radius / cs.d == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-4));
  CHECK_FALSE(certify_rotund(unit_square(), 0.36).pass);
  CHECK(certify_rotund(l_shape_poly(), 0.2).pass);
}

TEST_CASE("convex inscribed radius is at least a quarter of the min extent") {
  const Disk br = convex_ball_bound(rect(4, 1));
  CHECK(br.radius >= 0.25);
  CHECK(rect(4, 1).boundary_distance(br.center) >= br.radius - 1e-7);

  Polygon tri = Polygon::validate({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
  const double inradius = std::sqrt(3.0) / 6.0;
  CHECK(inscribed_disk(tri).radius == doctest::Approx(inradius).epsilon(1e-5));
  CHECK(convex_ball_bound(tri).radius >= 0.25 * min_max_extent(tri).min_extent - 1e-9);
  CHECK(convex_ball_bound(tri).radius <= inradius + 1e-7);

  CHECK_THROWS_AS(convex_ball_bound(l_shape_poly()), Error);

  for (unsigned seed = 1; seed <= 25; ++seed) {
    Polygon P = random_convex(seed);
    const Disk d = inscribed_disk(P);
    CHECK(d.radius >= 0.25 * min_max_extent(P).min_extent - 1e-7);
    CHECK(P.boundary_distance(d.center) >= d.radius - 1e-7);
  }
}

TEST_CASE("balanced pieces skip the end split") {
  Polygon P = unit_square();
  const SemiconvexCert cert = certify_semiconvex(P, 0.5);
  REQUIRE(cert.pass);
  const EndSplit es = split_ends(P, 0.5, cert);
  CHECK(es.trivial);
  REQUIRE(es.p1.has_value());
  CHECK(rings_cyclically_equal(es.p1->verts(), P.verts(), P.eps()));
  CHECK(es.c_empirical == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("long convex strips pass through the end split uncut") {
  Polygon P = rect(100, 1);
  const SemiconvexCert cert = certify_semiconvex(P, 0.5);
  REQUIRE(cert.pass);
  const EndSplit es = split_ends(P, 0.5, cert);
  CHECK_FALSE(es.trivial);
  CHECK_FALSE(es.p1.has_value());
  CHECK_FALSE(es.p2.has_value());
  CHECK(es.pmid.area() == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("end split isolates the dent of a long strip") {
  Polygon P = notch_end();
  const SemiconvexCert cert = certify_semiconvex(P, 0.3);
  REQUIRE(cert.pass);
  const EndSplit es = split_ends(P, 0.3, cert);
  REQUIRE_FALSE(es.trivial);
  REQUIRE(es.s1.has_value());
  // The tie-breaking rotation tilts the working frame by a few 1e-7 rad.
  CHECK(std::abs(es.s1->a.x - es.s1->b.x) < 1e-5);
  REQUIRE(es.p1.has_value());
  CHECK(es.p1->vertex_near({2, 0.9}) >= 0);
  CHECK(es.pmid.is_convex());

  double cut_len = dist(es.s1->a, es.s1->b);
  if (es.s2) cut_len += dist(es.s2->a, es.s2->b);
  CHECK(cut_len <= 0.3 * P.boundary_length() + 1e-9);

  double area = es.pmid.area() + es.p1->area();
  if (es.p2) area += es.p2->area();
  CHECK(area == doctest::Approx(P.area()).epsilon(1e-9));

  // Empirical constant witnesses both clauses for the end piece.
  const ExtentResult e1 = min_max_extent(*es.p1);
  CHECK(e1.max_extent / e1.min_extent <= es.c_empirical + 1e-9);
  const Vec2 v = (*es.p1)[es.p1->vertex_near({2, 0.9})];
  const double dvs = point_segment_dist(v, es.s1->a, es.s1->b);
  CHECK(e1.max_extent <= es.c_empirical * dvs + 1e-9);
}

TEST_CASE("end split rejects uncertified input") {
  Polygon P = notched_rect(0.1);
  const SemiconvexCert bad = certify_semiconvex(P, 0.1);
  REQUIRE_FALSE(bad.pass);
  CHECK_THROWS_AS(split_ends(P, 0.1, bad), Error);
}

TEST_CASE("slab partition halves a 4x1 rectangle") {
  const SlabResult sr = slab_partition_convex(rect(4, 1), 0.5);
  REQUIRE(sr.partition.pieces.size() == 2);
  const std::vector<Vec2> left{{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  const std::vector<Vec2> right{{2, 0}, {4, 0}, {4, 1}, {2, 1}};
  bool found_left = false, found_right = false;
  for (const Polygon& q : sr.partition.pieces) {
    found_left |= rings_cyclically_equal(q.verts(), left, 1e-9);
    found_right |= rings_cyclically_equal(q.verts(), right, 1e-9);
  }
  CHECK(found_left);
  CHECK(found_right);
  REQUIRE(sr.partition.cuts.size() == 1);
  CHECK(sr.partition.cuts[0].v.x == doctest::Approx(2.0));
  for (const RotundCert& c : sr.certs) CHECK(c.pass);
}

TEST_CASE("slab keeps a square whole") {
  const SlabResult sr = slab_partition_convex(unit_square(), 0.5);
  CHECK(sr.partition.pieces.size() == 1);
  CHECK(sr.partition.cuts.empty());
}

TEST_CASE("slab budget and certificates on a trapezoid") {
  Polygon P = Polygon::validate({{0, 0}, {10, 0}, {7, 3}, {3, 3}});
  const SlabResult sr = slab_partition_convex(P, 0.25);
  CHECK(sr.partition.cut_length_sum() <= 0.25 * P.boundary_length() + 1e-9);
  CHECK(sr.omega_min > 0.0);
  for (const Polygon& q : sr.partition.pieces) CHECK(certify_rotund(q, sr.omega_min).pass);
  CHECK(ledger_identity_check(sr.partition));
}

TEST_CASE("slab rejects bad inputs") {
  CHECK_THROWS_AS(slab_partition_convex(l_shape_poly(), 0.5), Error);
  Polygon sliver = Polygon::validate({{0, 0}, {10, 0}, {0, 1}});
  try {
    slab_partition_convex(sliver, 0.5);
    FAIL("expected AngleTooSharp");
  } catch (const Error& e) {
    CHECK(e.code() == Err::AngleTooSharp);
  }
}

TEST_CASE("rotund pipeline on convex pieces") {
  RotundPipelineParams prm;
  prm.theta = 0.5;
  prm.vartheta = 0.5;
  prm.epsilon = 0.01;

  Polygon sq = unit_square();
  const SemiconvexCert cs = certify_semiconvex(sq, 0.5);
  const RotundDecomposition ds = decompose_rotund(sq, cs, prm);
  CHECK(ds.partition.pieces.size() == 1);
  CHECK(ds.partition.exceptional.empty());
  CHECK(ds.rotund_certs[0].pass);

  Polygon strip = rect(8, 1);
  const SemiconvexCert cr = certify_semiconvex(strip, 0.5);
  const RotundDecomposition dr = decompose_rotund(strip, cr, prm);
  REQUIRE(dr.partition.pieces.size() == 4);
  int hits = 0;
  for (int k = 0; k < 4; ++k) {
    const std::vector<Vec2> cell{
        {2.0 * k, 0}, {2.0 * k + 2, 0}, {2.0 * k + 2, 1}, {2.0 * k, 1}};
    for (const Polygon& q : dr.partition.pieces)
      if (rings_cyclically_equal(q.verts(), cell, 1e-9)) ++hits;
  }
  CHECK(hits == 4);
}

TEST_CASE("sharp wedge tip lands in the exceptional set") {
  Polygon P = Polygon::validate({{0, 0}, {10, 0}, {10, 10.0 * std::tan(0.1)}});
  RotundPipelineParams prm;
  prm.theta = 0.5;
  prm.vartheta = 0.5;
  prm.epsilon = 0.05 * P.boundary_length();
  const SemiconvexCert cert = certify_semiconvex(P, 0.5);
  REQUIRE(cert.pass);
  const RotundDecomposition d = decompose_rotund(P, cert, prm);
  CHECK_FALSE(d.partition.exceptional.empty());
  CHECK(d.partition.exceptional_boundary_sum() <= prm.epsilon + 1e-9);
  CHECK(d.omega_min > 0.0);
  for (const RotundCert& c : d.rotund_certs) CHECK(c.pass);
  CHECK(ledger_identity_check(d.partition));
}

TEST_CASE("nonconvex pipeline path splits ends and certifies") {
  Polygon P = notch_end();
  RotundPipelineParams prm;
  prm.theta = 0.5;
  prm.vartheta = 0.3;
  prm.epsilon = 0.02 * P.boundary_length();
  const SemiconvexCert cert = certify_semiconvex(P, 0.3);
  REQUIRE(cert.pass);
  const RotundDecomposition d = decompose_rotund(P, cert, prm);
  CHECK(d.part_seg_ok);
  CHECK(d.omega_min > 0.0);
  CHECK(d.rotund_certs.size() == d.partition.pieces.size());
  for (const RotundCert& c : d.rotund_certs) CHECK(c.pass);
  CHECK(ledger_identity_check(d.partition));
}

TEST_CASE("inscribed disk respects rigid motions and dilation") {
  Polygon P = blob(5);
  const Disk d0 = inscribed_disk(P);
  const Disk d1 = inscribed_disk(transformed(P, 0.83, {7.5, -3.25}));
  CHECK(d1.radius == doctest::Approx(d0.radius).epsilon(1e-6));

  std::vector<Vec2> scaled;
  for (const Vec2& v : P.verts()) scaled.push_back({3.0 * v.x, 3.0 * v.y});
  const Disk d3 = inscribed_disk(Polygon::validate(scaled));
  CHECK(d3.radius == doctest::Approx(3.0 * d0.radius).epsilon(1e-5));
}

}
