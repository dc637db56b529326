#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "johncut/fixtures.h"
#include "johncut/semiconvex.h"
#include "johncut/tubes.h"
#include "support.h"

using namespace johncut;

namespace {

// Dent pentagon: concave vertex (2,1) between two long slanted edges.
Polygon dent_pentagon() { return Polygon::validate({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}}); }

SemiconvexParams coarse_params() {
  SemiconvexParams prm;
  prm.theta = 0.8;
  prm.eta = 0.8;
  prm.vartheta = 0.4;
  prm.vartheta_bar = vartheta_bar_of(prm.vartheta);
  prm.vartheta_tilde = prm.vartheta_bar * prm.eta / (4.0 * prm.eta + 2.0);
  prm.alpha = 0.5 * std::asin(prm.eta);
  prm.piece_vartheta = vartheta_bar_of(prm.vartheta_tilde);
  return prm;
}

}  // namespace

TEST_SUITE("semiconvex") {

TEST_CASE("derived parameter bundle") {
  const SemiconvexParams p = SemiconvexParams::from_theta(0.25);
  CHECK(p.vartheta == doctest::Approx(0.025));  // clamped to eta/2
  CHECK(p.vartheta_bar == doctest::Approx(1.0 / 483.0));
  CHECK(p.vartheta_tilde == doctest::Approx(p.vartheta_bar * 0.05 / 2.2));
  CHECK(p.alpha == doctest::Approx(0.5 * std::asin(0.05)));
  CHECK(p.piece_vartheta == doctest::Approx(vartheta_bar_of(p.vartheta_tilde)));

  const SemiconvexParams q = SemiconvexParams::from_theta(0.02);
  CHECK(q.vartheta == doctest::Approx(0.01));  // theta/2 below the clamp
}

TEST_CASE("single-corner chord is strongly admissible") {
  Polygon P = l_shape_poly();
  const Chord c{{1, 1}, {1, 0}};
  CHECK(check_SP(P, c, 0.1));
  CHECK(check_WSP(P, c, 0.1));
}

TEST_CASE("second tooth tip inside the cigar blocks strong admissibility") {
  Polygon P = comb(2);
  const Chord c{{2, 0.2}, {0, 0.1}};
  REQUIRE(cigar_membership(c.v, c.w, 0.1, {1, 0.2}));
  CHECK_FALSE(check_SP(P, c, 0.1));
  // The selected side is the one without the second tip, so the weak form passes.
  CHECK(check_WSP(P, c, 0.1));
}

TEST_CASE("sliver triangles fail the apex-angle clause") {
  Polygon P = dent_pentagon();
  // Apex angle at (2,1) of the cut-off triangle ((2,1),(0,3),(0,2.996)) is
  // about 0.001 rad, under the 0.5*asin(0.1) ~ 0.05 rad floor.
  CHECK_FALSE(check_SP(P, Chord{{2, 1}, {0, 2.996}}, 0.1));
  CHECK(check_SP(P, Chord{{2, 1}, {0, 1}}, 0.1));
}

TEST_CASE("convex polygons certify vacuously") {
  const SemiconvexCert c = certify_semiconvex(random_convex(4), 0.9);
  CHECK(c.pass);
  CHECK(c.candidates_examined == 0);
}

TEST_CASE("notched rectangle fails with the tip chord") {
  Polygon P = notched_rect(0.1);
  const SemiconvexCert c = certify_semiconvex(P, 0.1);
  REQUIRE_FALSE(c.pass);
  REQUIRE(c.counterexample.has_value());
  CHECK(dist(c.counterexample->v, {5, 0.1}) < 1e-6);
  CHECK(dist(c.counterexample->w, {5, 0}) < 1e-6);
  CHECK(c.counterexample->length() == doctest::Approx(0.1));
  CHECK(c.counterexample_min_diameter >= 4.9);
  // The stored data re-checks the violation.
  CHECK(c.counterexample->length() < 0.1 * c.counterexample_min_diameter - 1e-9);
}

TEST_CASE("l-shape certifies at one half but not three quarters") {
  Polygon P = l_shape_poly();
  CHECK(certify_semiconvex(P, 0.5).pass);
  const SemiconvexCert c = certify_semiconvex(P, 0.75);
  REQUIRE_FALSE(c.pass);
  REQUIRE(c.counterexample.has_value());
  // The near-diagonal chord wins: ratio about sqrt(2)/sqrt(5).
  const double ratio = c.counterexample->length() / c.counterexample_min_diameter;
  CHECK(ratio > 0.5);
  CHECK(ratio < 0.75);
}

TEST_CASE("certification is monotone in the level") {
  for (const Polygon& P : {l_shape_poly(), comb(3), koch_variant(2)}) {
    for (double t : {0.5, 0.1, 0.025}) {
      if (certify_semiconvex(P, t).pass) CHECK(certify_semiconvex(P, 0.5 * t).pass);
    }
  }
}

TEST_CASE("splitting chord on the notched rectangle cuts the tip") {
  const SemiconvexParams prm = SemiconvexParams::from_theta(0.5);
  Polygon P = notched_rect(0.1);
  const auto sr = find_splitting_chord(P, prm);
  REQUIRE(sr.has_value());
  const Chord& c = sr->chord;
  // Leaves from the notch tip and lands on the bottom edge.
  CHECK(dist(c.v, {5, 0.1}) < 1e-6);
  CHECK(std::abs(c.w.y) < 1e-9);
  CHECK(c.length() < 0.15);
  // Budget: the cut is short against the boundary of the side it certifies.
  const double q1_rest = sr->q1.boundary_length() - c.length();
  CHECK(c.length() <= prm.theta * q1_rest + 1e-9);
}

TEST_CASE("no splitting chord on convex inputs") {
  CHECK_FALSE(find_splitting_chord(random_convex(8), SemiconvexParams::from_theta(0.5)).has_value());
}

TEST_CASE("splitting chord on the comb is admissible and balanced") {
  Polygon P = comb(3);
  const SemiconvexParams prm = coarse_params();
  REQUIRE_FALSE(certify_semiconvex(P, prm.vartheta).pass);
  const auto sr = find_splitting_chord(P, prm);
  REQUIRE(sr.has_value());
  // Leaves from a slot-bottom vertex of the comb.
  CHECK(P.vertex_near(sr->chord.v) >= 0);
  CHECK(check_WSP(P, *sr, prm.eta));
  const QSide side = select_Qvw(*sr);
  const int nsel = side == QSide::Q2 ? sr->n2 : sr->n1;
  CHECK(nsel == std::min(sr->n1, sr->n2));
}

TEST_CASE("decomposition keeps convex inputs whole") {
  const SemiconvexDecomposition d =
      decompose_semiconvex(random_convex(12), SemiconvexParams::from_theta(0.25));
  CHECK(d.partition.pieces.size() == 1);
  CHECK(d.partition.cuts.empty());
  CHECK(d.certs[0].pass);
}

TEST_CASE("notched rectangle splits once and books the cut twice") {
  Polygon P = notched_rect(0.1);
  const SemiconvexParams prm = SemiconvexParams::from_theta(0.5);
  const SemiconvexDecomposition d = decompose_semiconvex(P, prm);
  CHECK(d.partition.pieces.size() == 2);
  REQUIRE(d.partition.cuts.size() == 1);
  CHECK(d.partition.pieces_boundary_sum() ==
        doctest::Approx(P.boundary_length() + 2.0 * d.partition.cuts[0].length())
            .epsilon(1e-9));
  CHECK(ledger_identity_check(d.partition));
  const double strong = 1.0 + 2.0 * prm.theta / (1.0 - prm.theta);
  CHECK(d.partition.pieces_boundary_sum() <= strong * P.boundary_length() + 1e-9);
  for (const SemiconvexCert& c : d.certs) CHECK(c.pass);
}

TEST_CASE("koch generation two certifies whole at the pipeline level") {
  Polygon P = koch_variant(2);
  const SemiconvexParams prm = SemiconvexParams::from_theta(0.25);
  const SemiconvexDecomposition d = decompose_semiconvex(P, prm);
  CHECK(ledger_identity_check(d.partition));
  const double strong = 1.0 + 2.0 * prm.theta / (1.0 - prm.theta);
  CHECK(d.partition.pieces_boundary_sum() <= strong * P.boundary_length() + 1e-9);
  for (const SemiconvexCert& c : d.certs) {
    CHECK(c.pass);
    CHECK(c.vartheta == doctest::Approx(prm.piece_vartheta));
  }
}

TEST_CASE("decomposition invariants on bent fixtures") {
  const SemiconvexParams prm = SemiconvexParams::from_theta(0.5);
  for (const Polygon& P : {notched_rect(0.1), spiral(8), comb(5), blob(3)}) {
    const SemiconvexDecomposition d = decompose_semiconvex(P, prm);
    CHECK(ledger_identity_check(d.partition));
    double area = 0.0;
    for (const Polygon& q : d.partition.pieces) {
      area += q.area();
      for (int ci : q.concave_indices()) CHECK(P.on_boundary(q[ci]));
    }
    CHECK(area == doctest::Approx(P.area()).epsilon(1e-9));
    // Cut endpoints stay pairwise separated.
    for (std::size_t i = 0; i < d.partition.cuts.size(); ++i)
      for (std::size_t j = i + 1; j < d.partition.cuts.size(); ++j)
        CHECK(dist(d.partition.cuts[i].w, d.partition.cuts[j].w) > P.eps());
  }
}

TEST_CASE("decomposition invariants survive rigid motions") {
  // Candidate chords are anchored to the sampled boundary, so rotated
  // inputs may split differently; the certificates and the ledger still
  // have to hold.
  Polygon Q = transformed(notched_rect(0.1), 0.7, {3.0, -2.0});
  const SemiconvexParams prm = SemiconvexParams::from_theta(0.5);
  const SemiconvexDecomposition d = decompose_semiconvex(Q, prm);
  CHECK(ledger_identity_check(d.partition));
  for (const SemiconvexCert& c : d.certs) CHECK(c.pass);
  double area = 0.0;
  for (const Polygon& q : d.partition.pieces) area += q.area();
  CHECK(area == doctest::Approx(Q.area()).epsilon(1e-9));
}

TEST_CASE("base-angle criterion for attached pieces") {
  // Chord across the square splits into two convex halves: vacuous.
  const SplitResult sq = split_by_chord(unit_square(), {0, 0}, {1, 1});
  CHECK(check_part_seg_criterion(unit_square(), sq.chord, 0.3, QSide::Q1));
  CHECK(check_part_seg_criterion(unit_square(), sq.chord, 0.3, QSide::Q2));

  // Dent tip hovering 0.01 above the chord: base angles ~0.005 rad.
  Polygon P = Polygon::validate({{0, 0}, {4, 0}, {4, 3}, {2.2, 3}, {2, 2.01}, {1.8, 3}, {0, 3}});
  const SplitResult sr = split_by_chord(P, {0, 2}, {4, 2});
  const QSide dent_side = sr.q1.vertex_near({2, 2.01}) >= 0 ? QSide::Q1 : QSide::Q2;
  CHECK_FALSE(check_part_seg_criterion(P, sr.chord, 0.3, dent_side));
  CHECK(check_part_seg_criterion(P, sr.chord, 0.004, dent_side));
}

}
