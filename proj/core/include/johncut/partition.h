#pragma once

#include "johncut/polygon.h"

namespace johncut {

// Segment between two boundary points that splits a polygon into exactly two
// simple polygons. Endpoints are stored post-snapping.
struct Chord {
  Vec2 v;
  Vec2 w;
  double length() const { return dist(v, w); }
  Segment segment() const { return {v, w}; }
};

struct SplitResult {
  Polygon q1;  // ring traced counter-clockwise from v to w, closed by the chord
  Polygon q2;  // complementary ring from w to v
  Chord chord;
  int n1 = 0;  // concave vertices of the host (excluding v,w) on the boundary of q1
  int n2 = 0;
};

SplitResult split_by_chord(const Polygon& P, Vec2 v, Vec2 w);

enum class QSide { Q1, Q2, Both };

// Side holding fewer off-chord concave vertices, then smaller area, then both.
QSide select_Qvw(const SplitResult& sr, double area_tol_rel = 1e-9);

struct Partition {
  Polygon input;
  std::vector<Polygon> pieces;
  std::vector<Polygon> exceptional;  // trimmed sharp-angle triangles
  std::vector<Chord> cuts;

  double pieces_boundary_sum() const {
    double s = 0.0;
    for (const Polygon& p : pieces) s += p.boundary_length();
    return s;
  }
  double exceptional_boundary_sum() const {
    double s = 0.0;
    for (const Polygon& p : exceptional) s += p.boundary_length();
    return s;
  }
  double cut_length_sum() const {
    double s = 0.0;
    for (const Chord& c : cuts) s += c.length();
    return s;
  }
  double pieces_area_sum() const {
    double s = 0.0;
    for (const Polygon& p : pieces) s += p.area();
    for (const Polygon& p : exceptional) s += p.area();
    return s;
  }
};

struct LedgerResult {
  bool ok = false;
  double slack = 0.0;  // (1+theta) H1 budget minus the pieces' boundary sum
};

// Bound: sum of piece boundaries (exceptional set excluded) against
// (1+theta) H1(boundary of input) plus tolerance.
LedgerResult ledger_check(const Partition& part, double theta, double tol_rel = 1e-9);

// Exact accounting: pieces plus exceptional boundary equals input boundary
// plus twice the cut lengths.
bool ledger_identity_check(const Partition& part, double tol_rel = 1e-9);

// Interior-disjointness of two simple polygons sharing at most boundary:
// no proper edge crossings and no strict vertex containment either way.
bool interiors_disjoint(const Polygon& A, const Polygon& B);

}  // namespace johncut
