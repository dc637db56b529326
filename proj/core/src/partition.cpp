#include "johncut/partition.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "johncut/errors.h"
#include "johncut/predicates.h"

namespace johncut {

namespace {

struct BoundaryPoint {
  Vec2 p;
  int edge = 0;    // lies on edge [vertex(edge); vertex(edge+1)]
  double t = 0.0;  // parameter along that edge
  bool is_vertex = false;
  int vertex_index = 0;
};

// Snap an endpoint onto the boundary: exact vertex, exact edge point, or
// nearest point within eps. Points off the boundary are rejected.
BoundaryPoint snap_endpoint(const Polygon& P, Vec2 p) {
  BoundaryPoint bp;
  int vi = P.vertex_near(p);
  if (vi >= 0) {
    bp.p = P[vi];
    bp.is_vertex = true;
    bp.vertex_index = vi;
    bp.edge = vi;
    return bp;
  }
  double t = 0.0;
  int e = P.locate_on_boundary(p, &t);
  if (e >= 0) {
    bp.p = p;
    bp.edge = e;
    bp.t = t;
    return bp;
  }
  // Nearest edge within eps; the projected foot may round off the exact
  // supporting line, so it cannot be relocated with exact predicates.
  double best = std::numeric_limits<double>::max();
  int be = -1;
  double bt = 0.0;
  Vec2 bc;
  const int n = P.size();
  for (int i = 0; i < n; ++i) {
    double tt = 0.0;
    const Vec2 c = closest_point_on_segment(p, P[i], P.vertex(i + 1), &tt);
    const double d = dist(p, c);
    if (d < best) {
      best = d;
      be = i;
      bt = tt;
      bc = c;
    }
  }
  if (best <= P.eps()) {
    vi = P.vertex_near(bc);
    if (vi >= 0) {
      bp.p = P[vi];
      bp.is_vertex = true;
      bp.vertex_index = vi;
      bp.edge = vi;
      return bp;
    }
    bp.p = bc;
    bp.edge = be;
    bp.t = bt;
    return bp;
  }
  throw Error(Err::ChordInvalid, "chord endpoint is not on the polygon boundary");
}

// Position along the boundary as edge index plus edge parameter, for cyclic
// ordering of inserted points against the vertex ring.
double boundary_key(const BoundaryPoint& bp) {
  if (bp.is_vertex) return static_cast<double>(bp.vertex_index);
  return static_cast<double>(bp.edge) + std::clamp(bp.t, 1e-15, 1.0 - 1e-15);
}

}  // namespace

SplitResult split_by_chord(const Polygon& P, Vec2 v_in, Vec2 w_in) {
  const int n = P.size();
  BoundaryPoint bv = snap_endpoint(P, v_in);
  BoundaryPoint bw = snap_endpoint(P, w_in);

  if (dist(bv.p, bw.p) <= P.eps()) {
    throw Error(Err::ChordInvalid, "chord endpoints coincide");
  }

  if (!P.contains_chord(bv.p, bw.p)) {
    throw Error(Err::ChordExitsPolygon, "chord leaves the polygon");
  }

  // Catalogue every contact between the chord and the boundary. Contacts
  // strictly between the endpoints mean the chord grazes the boundary and the
  // two sides would not both be simple polygons with positive area.
  {
    std::vector<double> params{0.0, 1.0};
    bool overlap_found = false;
    for (int i = 0; i < n; ++i) {
      Vec2 a = P[i];
      Vec2 b = P[(i + 1) % n];
      SegX cls = classify_segments(bv.p, bw.p, a, b);
      if (cls == SegX::Overlap) overlap_found = true;
      if (cls != SegX::None) intersection_params(bv.p, bw.p, a, b, params);
    }
    const double len = dist(bv.p, bw.p);
    const double tol = P.eps() / std::max(len, P.eps());
    bool interior_contact = false;
    for (double t : params) {
      if (t > tol && t < 1.0 - tol) interior_contact = true;
    }
    if (overlap_found && !interior_contact) {
      throw Error(Err::ChordOnBoundary, "chord lies along the boundary");
    }
    if (overlap_found) {
      throw Error(Err::ChordTouchesBoundaryInternally,
                  "chord overlaps the boundary between its endpoints");
    }
    if (interior_contact) {
      throw Error(Err::ChordTouchesBoundaryInternally,
                  "chord touches the boundary between its endpoints");
    }
  }

  // Vertex ring augmented with the chord endpoints, walked v -> w and w -> v.
  struct RingEntry {
    Vec2 p;
    double key;
    bool is_v = false;
    bool is_w = false;
    bool host_vertex = false;
    int host_index = 0;
  };
  std::vector<RingEntry> ring;
  ring.reserve(n + 2);
  for (int i = 0; i < n; ++i) {
    ring.push_back({P[i], static_cast<double>(i), false, false, true, i});
  }
  auto add_point = [&](const BoundaryPoint& bp, bool is_v) {
    if (bp.is_vertex) {
      for (RingEntry& e : ring) {
        if (e.host_vertex && e.host_index == bp.vertex_index) {
          (is_v ? e.is_v : e.is_w) = true;
          return;
        }
      }
    }
    RingEntry e{bp.p, boundary_key(bp), is_v, !is_v, false, 0};
    ring.push_back(e);
  };
  add_point(bv, true);
  add_point(bw, false);
  std::stable_sort(ring.begin(), ring.end(),
                   [](const RingEntry& a, const RingEntry& b) { return a.key < b.key; });

  int iv = -1, iw = -1;
  const int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    if (ring[i].is_v) iv = i;
    if (ring[i].is_w) iw = i;
  }
  if (iv < 0 || iw < 0 || iv == iw) {
    throw Error(Err::ChordInvalid, "chord endpoints could not be placed on the ring");
  }

  auto walk = [&](int from, int to) {
    std::vector<Vec2> pts;
    int i = from;
    while (true) {
      pts.push_back(ring[i].p);
      if (i == to) break;
      i = (i + 1) % m;
    }
    return pts;
  };

  // The host ring is CCW, so the walk v -> w is the CCW side closed by the
  // returning chord edge w -> v.
  std::vector<Vec2> r1 = walk(iv, iw);
  std::vector<Vec2> r2 = walk(iw, iv);

  SplitResult sr;
  sr.chord = Chord{bv.p, bw.p};
  try {
    sr.q1 = Polygon::from_ring(r1);
    sr.q2 = Polygon::from_ring(r2);
  } catch (const Error&) {
    throw Error(Err::ChordInvalid, "chord does not split into two simple polygons");
  }

  // Concave vertices of the host, excluding the chord endpoints, assigned to
  // the side whose boundary carries them.
  auto count_side = [&](const Polygon& q) {
    int cnt = 0;
    for (int ci : P.concave_indices()) {
      Vec2 u = P[ci];
      if (dist(u, bv.p) <= P.eps() || dist(u, bw.p) <= P.eps()) continue;
      if (q.vertex_near(u) >= 0) ++cnt;
    }
    return cnt;
  };
  sr.n1 = count_side(sr.q1);
  sr.n2 = count_side(sr.q2);
  return sr;
}

QSide select_Qvw(const SplitResult& sr, double area_tol_rel) {
  if (sr.n1 < sr.n2) return QSide::Q1;
  if (sr.n2 < sr.n1) return QSide::Q2;
  const double a1 = sr.q1.area();
  const double a2 = sr.q2.area();
  const double tol = area_tol_rel * std::max(a1, a2);
  if (std::abs(a1 - a2) <= tol) return QSide::Both;
  return a1 < a2 ? QSide::Q1 : QSide::Q2;
}

LedgerResult ledger_check(const Partition& part, double theta, double tol_rel) {
  const double h1 = part.input.boundary_length();
  const double budget = (1.0 + theta) * h1 + tol_rel * h1;
  const double used = part.pieces_boundary_sum();
  LedgerResult r;
  r.slack = budget - used;
  r.ok = used <= budget;
  return r;
}

bool ledger_identity_check(const Partition& part, double tol_rel) {
  const double h1 = part.input.boundary_length();
  const double lhs = part.pieces_boundary_sum() + part.exceptional_boundary_sum();
  const double rhs = h1 + 2.0 * part.cut_length_sum();
  return std::abs(lhs - rhs) <= tol_rel * std::max(lhs, rhs);
}

bool interiors_disjoint(const Polygon& A, const Polygon& B) {
  if (!A.bbox().overlaps(B.bbox(), A.eps() + B.eps())) return true;
  const int na = A.size(), nb = B.size();
  for (int i = 0; i < na; ++i) {
    Vec2 a0 = A[i], a1 = A[(i + 1) % na];
    for (int j = 0; j < nb; ++j) {
      Vec2 b0 = B[j], b1 = B[(j + 1) % nb];
      if (classify_segments(a0, a1, b0, b1) == SegX::Proper) return false;
    }
  }
  // No proper crossings: any overlap would be a containment, witnessed by a
  // strictly interior point of one ring inside the other.
  for (int i = 0; i < na; ++i) {
    if (B.strictly_contains(A[i])) return false;
    if (B.strictly_contains((A[i] + A[(i + 1) % na]) * 0.5)) return false;
  }
  for (int j = 0; j < nb; ++j) {
    if (A.strictly_contains(B[j])) return false;
    if (A.strictly_contains((B[j] + B[(j + 1) % nb]) * 0.5)) return false;
  }
  if (B.contains(A.interior_point()) || A.contains(B.interior_point())) return false;
  return true;
}

}  // namespace johncut
