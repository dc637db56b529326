#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "johncut/fixtures.h"
#include "johncut/partition.h"
#include "johncut/predicates.h"
#include "support.h"

using namespace johncut;

namespace {

// Rebuilds the host ring from the two halves: q1 runs v..w closed by the
// chord, q2 runs w..v. Collinear vertices introduced by edge-interior chord
// endpoints are collapsed before comparing.
std::vector<Vec2> remerge(const SplitResult& sr) {
  auto path = [](const Polygon& Q, Vec2 from, Vec2 to) {
    const int i0 = Q.vertex_near(from);
    const int i1 = Q.vertex_near(to);
    REQUIRE(i0 >= 0);
    REQUIRE(i1 >= 0);
    std::vector<Vec2> out;
    for (int i = i0; i % Q.size() != i1 % Q.size() || out.empty(); ++i) out.push_back(Q.vertex(i));
    return out;  // from inclusive, to exclusive
  };
  std::vector<Vec2> ring = path(sr.q1, sr.chord.v, sr.chord.w);
  std::vector<Vec2> tail = path(sr.q2, sr.chord.w, sr.chord.v);
  ring.insert(ring.end(), tail.begin(), tail.end());
  std::vector<Vec2> out;
  const int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    const Vec2 a = ring[(i + n - 1) % n], b = ring[i], c = ring[(i + 1) % n];
    if (orient_sign(a, b, c) != 0) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("axis chord splits the l-shape into square and pentagon") {
  Polygon P = l_shape_poly();
  const SplitResult sr = split_by_chord(P, {1, 1}, {1, 0});
  CHECK(sr.q1.area() == doctest::Approx(2.0));
  CHECK(sr.q2.area() == doctest::Approx(1.0));
  CHECK(sr.n1 == 0);
  CHECK(sr.n2 == 0);
  CHECK(sr.chord.length() == doctest::Approx(1.0));
  CHECK(rings_cyclically_equal(remerge(sr), P.verts(), 1e-9));
}

TEST_CASE("diagonal chord splits the l-shape into equal halves") {
  Polygon P = l_shape_poly();
  const SplitResult sr = split_by_chord(P, {1, 1}, {0, 0});
  CHECK(sr.q1.area() == doctest::Approx(1.5));
  CHECK(sr.q2.area() == doctest::Approx(1.5));
  const std::vector<Vec2> lower{{0, 0}, {2, 0}, {2, 1}, {1, 1}};
  const std::vector<Vec2> upper{{0, 0}, {1, 1}, {1, 2}, {0, 2}};
  const bool q1_lower = rings_cyclically_equal(sr.q1.verts(), lower, 1e-9);
  CHECK((q1_lower ? rings_cyclically_equal(sr.q2.verts(), upper, 1e-9)
                  : rings_cyclically_equal(sr.q1.verts(), upper, 1e-9) &&
                        rings_cyclically_equal(sr.q2.verts(), lower, 1e-9)));
  CHECK(rings_cyclically_equal(remerge(sr), P.verts(), 1e-9));
}

TEST_CASE("chords along the boundary or leaving the polygon are rejected") {
  try {
    split_by_chord(unit_square(), {0, 0}, {1, 0});
    FAIL("boundary chord accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ChordOnBoundary);
  }
  try {
    split_by_chord(l_shape_poly(), {2, 1}, {1, 2});
    FAIL("exiting chord accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ChordExitsPolygon);
  }
}

TEST_CASE("chords grazing the boundary in their interior are rejected") {
  // Horizontal chord through the dent vertex (2,1) would create three parts.
  Polygon P = Polygon::validate({{0, 0}, {4, 0}, {4, 2}, {2, 1}, {0, 2}});
  try {
    split_by_chord(P, {0, 1}, {4, 1});
    FAIL("grazing chord accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ChordTouchesBoundaryInternally);
  }
}

TEST_CASE("side selection prefers fewer concave vertices, then smaller area") {
  Polygon L = l_shape_poly();
  const SplitResult a = split_by_chord(L, {1, 1}, {1, 0});
  CHECK(select_Qvw(a) == QSide::Q2);  // equal counts, area 1 < 2

  // Symmetric split of a regular hexagon through opposite vertices.
  std::vector<Vec2> hex;
  for (int k = 0; k < 6; ++k)
    hex.push_back({std::cos(k * std::numbers::pi / 3.0), std::sin(k * std::numbers::pi / 3.0)});
  const SplitResult b = split_by_chord(Polygon::validate(hex), {1, 0}, {-1, 0});
  CHECK(select_Qvw(b) == QSide::Both);

  // One side of the comb chord keeps the second tooth tip.
  const SplitResult c = split_by_chord(comb(2), {1, 0.2}, {0, 0});
  CHECK(c.n1 == 0);
  CHECK(c.n2 == 1);
  CHECK(select_Qvw(c) == QSide::Q1);
}

TEST_CASE("ledger bound counts every cut twice") {
  Polygon P = l_shape_poly();
  const SplitResult sr = split_by_chord(P, {1, 1}, {1, 0});
  Partition part;
  part.input = P;
  part.pieces = {sr.q1, sr.q2};
  part.cuts = {sr.chord};
  CHECK(part.pieces_boundary_sum() == doctest::Approx(10.0));
  CHECK(ledger_check(part, 0.25).ok);
  CHECK_FALSE(ledger_check(part, 0.2).ok);
  const LedgerResult lr = ledger_check(part, 0.5);
  CHECK(lr.ok);
  CHECK(lr.slack == doctest::Approx(2.0));
  CHECK(ledger_identity_check(part));
  part.cuts.clear();
  CHECK_FALSE(ledger_identity_check(part));
}

TEST_CASE("single-piece partitions have full slack") {
  Polygon P = comb(3);
  Partition part;
  part.input = P;
  part.pieces = {P};
  const LedgerResult lr = ledger_check(part, 0.25);
  CHECK(lr.ok);
  CHECK(lr.slack == doctest::Approx(0.25 * P.boundary_length()));
}

TEST_CASE("split pieces have disjoint interiors") {
  const SplitResult sr = split_by_chord(l_shape_poly(), {1, 1}, {0, 0});
  CHECK(interiors_disjoint(sr.q1, sr.q2));
  CHECK_FALSE(interiors_disjoint(unit_square(), transformed(unit_square(), 0.0, {0.5, 0.5})));
}

TEST_CASE("splits introduce no new concave vertices") {
  Polygon P = comb(3);
  const SplitResult sr = split_by_chord(P, {2, 0.2}, {2, 0});
  for (const Polygon& Q : {sr.q1, sr.q2})
    for (int ci : Q.concave_indices()) CHECK(P.on_boundary(Q[ci]));
  CHECK(sr.n1 + sr.n2 <= static_cast<int>(P.concave_indices().size()));
}

}
