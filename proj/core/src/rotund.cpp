#include "johncut/rotund.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "johncut/extents.h"
#include "johncut/geodesic.h"
#include "johncut/predicates.h"

namespace johncut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaMax = 1.0;

double piece_diameter(const Polygon& q) {
  if (q.is_convex()) return euclidean_diameter(q.verts());
  return intrinsic_diameter(q).d;
}

Polygon rotate_polygon(const Polygon& P, double ang) {
  std::vector<Vec2> ring;
  ring.reserve(P.size());
  for (const Vec2& p : P.verts()) ring.push_back(rotate(p, ang));
  return Polygon::validate(std::move(ring));
}

Chord rotate_chord(const Chord& c, double ang) {
  return Chord{rotate(c.v, ang), rotate(c.w, ang)};
}

// Clip a convex ring by the half plane dot(n, x) >= c.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& ring, Vec2 n, double c) {
  std::vector<Vec2> out;
  const int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    const Vec2 a = ring[i];
    const Vec2 b = ring[(i + 1) % m];
    const double da = dot(n, a) - c;
    const double db = dot(n, b) - c;
    if (da >= 0.0) out.push_back(a);
    if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
      out.push_back(a + (da / (da - db)) * (b - a));
    }
  }
  return out;
}

std::vector<Vec2> shrink_convex(const Polygon& P, double r) {
  std::vector<Vec2> ring = P.verts();
  for (int i = 0; i < P.size() && !ring.empty(); ++i) {
    const Vec2 a = P[i];
    const Vec2 b = P.vertex(i + 1);
    const Vec2 n = perp_ccw(normalized(b - a));  // inward for a CCW ring
    ring = clip_halfplane(ring, n, dot(n, a) + r);
  }
  return ring;
}

Disk inscribed_disk_convex(const Polygon& P) {
  const BBox& bb = P.bbox();
  double lo = 0.0;
  double hi = 0.5 * std::min(bb.hi.x - bb.lo.x, bb.hi.y - bb.lo.y);
  std::vector<Vec2> witness = P.verts();
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    std::vector<Vec2> ring = shrink_convex(P, mid);
    if (!ring.empty()) {
      lo = mid;
      witness = std::move(ring);
    } else {
      hi = mid;
    }
  }
  Vec2 c{0.0, 0.0};
  for (const Vec2& p : witness) c = c + p;
  c = c / static_cast<double>(witness.size());
  return Disk{c, P.boundary_distance(c)};
}

Disk inscribed_disk_nonconvex(const Polygon& P) {
  const BBox& bb = P.bbox();
  const double diag = bb.diagonal();
  const int n = 64;
  auto value = [&](Vec2 z) {
    const double d = P.boundary_distance(z);
    return P.strictly_contains(z) ? d : -d;
  };

  struct Seed {
    Vec2 z;
    double f;
  };
  std::vector<Seed> seeds;
  const double dx = (bb.hi.x - bb.lo.x) / n;
  const double dy = (bb.hi.y - bb.lo.y) / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec2 z{bb.lo.x + (i + 0.5) * dx, bb.lo.y + (j + 0.5) * dy};
      const double f = value(z);
      if (f > 0.0) seeds.push_back({z, f});
    }
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    if (a.f != b.f) return a.f > b.f;
    return lex_less(a.z, b.z);
  });
  if (seeds.empty()) seeds.push_back({P.interior_point(), 0.0});
  if (seeds.size() > 6) seeds.resize(6);

  Vec2 best = seeds[0].z;
  double best_f = value(best);
  for (const Seed& s : seeds) {
    Vec2 z = s.z;
    double f = value(z);
    double step = std::max(dx, dy);
    while (step > 1e-7 * diag) {
      bool moved = false;
      for (const Vec2 dir : {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1}}) {
        const Vec2 z2 = z + step * dir;
        const double f2 = value(z2);
        if (f2 > f) {
          z = z2;
          f = f2;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    if (f > best_f) {
      best = z;
      best_f = f;
    }
  }
  if (!P.strictly_contains(best)) best = P.interior_point();
  return Disk{best, P.boundary_distance(best)};
}

}  // namespace

Disk inscribed_disk(const Polygon& P) {
  return P.is_convex() ? inscribed_disk_convex(P) : inscribed_disk_nonconvex(P);
}

RotundCert certify_rotund(const Polygon& P, double omega) {
  RotundCert c;
  c.omega = omega;
  c.disk = inscribed_disk(P);
  c.d = intrinsic_diameter(P).d;
  const double tol = 1e-9 * c.d + P.eps();
  const bool contained = P.contains(c.disk.center) &&
                         P.boundary_distance(c.disk.center) >= c.disk.radius - tol;
  c.pass = contained && c.disk.radius >= omega * c.d - tol;
  return c;
}

Disk convex_ball_bound(const Polygon& P) {
  if (!P.is_convex()) throw Error(Err::NotConvex, "ball bound needs a convex polygon");
  return inscribed_disk_convex(P);
}

namespace {

// Crossing ordinates of the vertical line x = t with the boundary, sorted.
// Half-open counting in x makes the parity pairing consistent.
std::vector<double> cross_section_ys(const Polygon& P, double t) {
  std::vector<double> ys;
  for (int i = 0; i < P.size(); ++i) {
    const Vec2 a = P[i];
    const Vec2 b = P.vertex(i + 1);
    if ((a.x <= t) == (b.x <= t)) continue;
    ys.push_back(a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x));
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

double cross_section_length(const Polygon& P, double t) {
  const std::vector<double> ys = cross_section_ys(P, t);
  double len = 0.0;
  for (size_t k = 0; k + 1 < ys.size(); k += 2) len += ys[k + 1] - ys[k];
  return len;
}

std::optional<Segment> single_cross_section(const Polygon& P, double t) {
  const std::vector<double> ys = cross_section_ys(P, t);
  if (ys.size() != 2) return std::nullopt;
  if (ys[1] - ys[0] <= P.eps()) return std::nullopt;
  return Segment{Vec2{t, ys[0]}, Vec2{t, ys[1]}};
}

bool distinct_abscissae(const Polygon& P) {
  std::vector<double> xs;
  xs.reserve(P.size());
  for (const Vec2& p : P.verts()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  for (size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] <= P.eps()) return false;
  }
  return true;
}

// First boundary hit strictly above (or below) v on the vertical line
// through it. Assumes no vertex shares the abscissa of v.
std::optional<Vec2> vertical_first_hit(const Polygon& P, Vec2 v, bool up) {
  double best = std::numeric_limits<double>::max();
  bool found = false;
  for (int i = 0; i < P.size(); ++i) {
    const Vec2 a = P[i];
    const Vec2 b = P.vertex(i + 1);
    if ((a.x <= v.x) == (b.x <= v.x)) continue;
    const double y = a.y + (v.x - a.x) * (b.y - a.y) / (b.x - a.x);
    const double dy = up ? y - v.y : v.y - y;
    if (dy > P.eps() && dy < best) {
      best = dy;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return Vec2{v.x, up ? v.y + best : v.y - best};
}

bool segment_meets_polyline(const Segment& s, const std::vector<Vec2>& pts, double tol) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (classify_segments(s.a, s.b, pts[i], pts[i + 1]) != SegX::None) return true;
    if (point_segment_dist(pts[i], s.a, s.b) <= tol) return true;
  }
  if (!pts.empty() && point_segment_dist(pts.back(), s.a, s.b) <= tol) return true;
  return false;
}

bool point_on_polyline(Vec2 p, const std::vector<Vec2>& pts, double tol) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (point_segment_dist(p, pts[i], pts[i + 1]) <= tol) return true;
  }
  return false;
}

bool has_vertex(const Polygon& q, Vec2 p) { return q.vertex_near(p) >= 0 || q.contains(p); }

}  // namespace

EndSplit split_ends(const Polygon& P, double vartheta, const SemiconvexCert& cert) {
  if (!(vartheta > 0.0) || !(vartheta < 1.0))
    throw Error(Err::BadInput, "vartheta must lie in (0,1)");
  if (!cert.pass || cert.vartheta + 1e-12 < vartheta)
    throw Error(Err::NotSemiconvexInput, "end split needs a semiconvexity certificate");

  const ExtentResult ext = min_max_extent(P);
  double rot = 0.5 * kPi - ext.argmin_angle;
  Polygon R;
  bool rotated = false;
  for (int k = 0; k < 10000; ++k) {
    R = rotate_polygon(P, rot);
    if (distinct_abscissae(R)) {
      rotated = true;
      break;
    }
    rot += 1e-7;
  }
  if (!rotated)
    throw Error(Err::ConstructionFailed, "no rotation with distinct abscissae found");

  const double e1 = R.bbox().hi.x - R.bbox().lo.x;
  const double e2 = R.bbox().hi.y - R.bbox().lo.y;

  EndSplit out;
  if (vartheta * vartheta * e1 <= 12.0 * e2) {
    out.trivial = true;
    out.p1 = P;
    out.c_empirical = ext.min_extent > 0.0 ? ext.max_extent / ext.min_extent : 0.0;
    return out;
  }

  // Extreme vertices, unique by the tie-breaking rotation.
  int i1 = 0, i2 = 0;
  for (int i = 1; i < R.size(); ++i) {
    if (R[i].x < R[i1].x) i1 = i;
    if (R[i].x > R[i2].x) i2 = i;
  }
  const Vec2 p1 = R[i1];
  const Vec2 p2 = R[i2];
  const GeodesicPath gamma = geodesic_distance(R, p1, p2);
  const double tol = 10.0 * R.eps();

  // Concave vertices owning a vertical chord that meets the geodesic,
  // labeled with the diameter of the relevant side of each such chord.
  struct Marked {
    Vec2 v;
    int side = 0;     // 1: closer to p1, 2: closer to p2
    double r = 0.0;   // max over chords of d(end-side or pocket side)
  };
  std::vector<Marked> marked;
  for (int ci : R.concave_indices()) {
    const Vec2 v = R[ci];
    const bool on_gamma = point_on_polyline(v, gamma.waypoints, tol);
    bool in_vstar = false;
    double r = 0.0;
    const double d1 = geodesic_distance(R, v, p1).length;
    const double d2 = geodesic_distance(R, v, p2).length;
    const int side = d1 <= d2 ? 1 : 2;
    const Vec2 pe = side == 1 ? p1 : p2;
    for (bool up : {true, false}) {
      const auto hit = vertical_first_hit(R, v, up);
      if (!hit || !R.contains_chord(v, *hit)) continue;
      SplitResult split;
      try {
        split = split_by_chord(R, v, *hit);
      } catch (const Error&) {
        continue;
      }
      if (!on_gamma && !segment_meets_polyline(Segment{v, *hit}, gamma.waypoints, tol))
        continue;
      in_vstar = true;
      const bool p1_in_q1 = has_vertex(split.q1, p1);
      const bool p2_in_q1 = has_vertex(split.q1, p2);
      const Polygon* relevant = nullptr;
      if (p1_in_q1 != p2_in_q1) {
        relevant = (side == 1) == p1_in_q1 ? &split.q1 : &split.q2;  // end side
      } else {
        relevant = p1_in_q1 ? &split.q2 : &split.q1;  // pocket side
      }
      r = std::max(r, piece_diameter(*relevant));
    }
    if (in_vstar || on_gamma) marked.push_back(Marked{v, side, r});
  }

  double rbar[3] = {0.0, 0.0, 0.0};
  Vec2 vi[3];
  bool have[3] = {false, false, false};
  for (int side : {1, 2}) {
    const Vec2 pe = side == 1 ? p1 : p2;
    double best_dx = -1.0;
    for (const Marked& m : marked) {
      if (m.side != side) continue;
      const double dx = std::abs(pe.x - m.v.x);
      if (dx > best_dx) {
        best_dx = dx;
        vi[side] = m.v;
        have[side] = true;
      }
      rbar[side] = std::max(rbar[side], m.r);
    }
  }

  // Cut abscissae. Sides without marked vertices are not cut at all.
  double t1 = p1.x;
  double t2 = p2.x;
  for (int side : {1, 2}) {
    if (!have[side]) continue;
    if (3.0 * rbar[side] > 0.25 * e1)
      throw Error(Err::ConstructionFailed, "end radius exceeds a quarter extent");
    const double sgn = side == 1 ? 1.0 : -1.0;
    const double px = side == 1 ? p1.x : p2.x;
    const double lo = px + sgn * 3.0 * rbar[side];
    const double hi = px + sgn * 0.25 * e1;
    double t;
    if (cross_section_length(R, lo) <= 3.0 * rbar[side] + R.eps()) {
      t = lo;
    } else {
      // H1(S_t) - |t - px| falls from positive to negative on [lo, hi].
      double a = lo, b = hi;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        if (cross_section_length(R, mid) - std::abs(mid - px) > 0.0)
          a = mid;
        else
          b = mid;
      }
      t = 0.5 * (a + b);
    }
    if (side == 1)
      t1 = t;
    else
      t2 = t;
  }

  // Cut off the end pieces with single vertical chords, nudging the
  // abscissa when the cross-section is not a single segment there.
  auto cut_at = [&](const Polygon& host, double t,
                    int end_side) -> std::optional<std::pair<SplitResult, Segment>> {
    for (int k = 0; k < 200; ++k) {
      const double off = (k % 2 == 0 ? 1.0 : -1.0) * ((k + 1) / 2) * 1e-6 * e1;
      const double tk = t + off;
      const auto seg = single_cross_section(host, tk);
      if (!seg) continue;
      try {
        SplitResult s = split_by_chord(host, seg->a, seg->b);
        return std::make_pair(std::move(s), *seg);
      } catch (const Error&) {
        continue;
      }
    }
    (void)end_side;
    return std::nullopt;
  };

  Polygon rest = R;
  std::optional<Polygon> piece1, piece2;
  std::optional<Segment> seg1, seg2;
  if (have[1]) {
    auto cut = cut_at(rest, t1, 1);
    if (!cut) throw Error(Err::ConstructionFailed, "no clean left cut found");
    const bool q1_left = has_vertex(cut->first.q1, p1);
    piece1 = q1_left ? cut->first.q1 : cut->first.q2;
    rest = q1_left ? cut->first.q2 : cut->first.q1;
    seg1 = cut->second;
  }
  if (have[2]) {
    auto cut = cut_at(rest, t2, 2);
    if (!cut) throw Error(Err::ConstructionFailed, "no clean right cut found");
    const bool q1_right = has_vertex(cut->first.q1, p2);
    piece2 = q1_right ? cut->first.q1 : cut->first.q2;
    rest = q1_right ? cut->first.q2 : cut->first.q1;
    seg2 = cut->second;
  }
  if (!rest.is_convex())
    throw Error(Err::ConstructionFailed, "middle piece is not convex");

  // Cut-length clause and the recorded aspect/distance constants.
  const double h1p = P.boundary_length();
  double c_emp = 0.0;
  for (int side : {1, 2}) {
    const auto& piece = side == 1 ? piece1 : piece2;
    const auto& seg = side == 1 ? seg1 : seg2;
    if (!piece) continue;
    if (seg->length() > vartheta * h1p + 1e-9 * h1p)
      throw Error(Err::ConstructionFailed, "end cut exceeds its length budget");
    const ExtentResult pe = min_max_extent(*piece);
    if (pe.min_extent > 0.0) c_emp = std::max(c_emp, pe.max_extent / pe.min_extent);
    for (int ci : piece->concave_indices()) {
      const double dv = point_segment_dist((*piece)[ci], seg->a, seg->b);
      if (dv > 0.0) c_emp = std::max(c_emp, pe.max_extent / dv);
    }
  }
  out.c_empirical = c_emp;

  // Back to the input frame.
  if (piece1) out.p1 = rotate_polygon(*piece1, -rot);
  if (piece2) out.p2 = rotate_polygon(*piece2, -rot);
  out.pmid = rotate_polygon(rest, -rot);
  if (seg1) out.s1 = Segment{rotate(seg1->a, -rot), rotate(seg1->b, -rot)};
  if (seg2) out.s2 = Segment{rotate(seg2->a, -rot), rotate(seg2->b, -rot)};
  return out;
}

namespace {

// Maximal cyclic runs of steep edges (direction within [phi, pi - phi] of
// the vertical, measured against e1 as lines).
std::vector<std::vector<int>> steep_runs(const Polygon& P, double phi) {
  const int n = P.size();
  std::vector<bool> steep(n, false);
  for (int i = 0; i < n; ++i) {
    const Vec2 d = P.vertex(i + 1) - P[i];
    const double ang = std::atan2(std::abs(d.y), std::abs(d.x));
    steep[i] = ang >= phi - 1e-12;
  }
  std::vector<std::vector<int>> runs;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (!steep[i] || used[i]) continue;
    int start = i;
    while (steep[(start + n - 1) % n] && (start + n - 1) % n != i) start = (start + n - 1) % n;
    std::vector<int> run;
    int j = start;
    while (steep[j] && !used[j]) {
      used[j] = true;
      run.push_back(j);
      j = (j + 1) % n;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace

SlabResult slab_partition_convex(const Polygon& P, double theta) {
  if (!P.is_convex()) throw Error(Err::NotConvex, "slab partition needs a convex polygon");
  if (!(theta > 0.0) || theta > kThetaMax)
    throw Error(Err::BadInput, "theta must lie in (0,1]");
  for (int i = 0; i < P.size(); ++i) {
    if (P.interior_angle(i) < 0.25 * kPi - 1e-9)
      throw Error(Err::AngleTooSharp, "slab partition needs angles of at least pi/4");
  }

  const ExtentResult ext = min_max_extent(P);
  const double rot = 0.5 * kPi - ext.argmin_angle;
  const Polygon R = rotate_polygon(P, rot);
  const double minx = R.bbox().lo.x;
  const double maxx = R.bbox().hi.x;

  // Shallow middle band: steep edges cluster at the two ends.
  double s1 = minx;
  double s2 = maxx;
  {
    auto runs = steep_runs(R, std::atan(theta));
    const double midx = 0.5 * (minx + maxx);
    for (const auto& run : runs) {
      double rlo = std::numeric_limits<double>::max();
      double rhi = std::numeric_limits<double>::lowest();
      for (int e : run) {
        for (const Vec2 p : {R[e], R.vertex(e + 1)}) {
          rlo = std::min(rlo, p.x);
          rhi = std::max(rhi, p.x);
        }
      }
      if (0.5 * (rlo + rhi) <= midx)
        s1 = std::max(s1, rhi);
      else
        s2 = std::min(s2, rlo);
    }
  }

  SlabResult out;
  out.partition.input = P;
  const double width = s2 - s1;
  const double delta = 1e-9 * std::max(width, maxx - minx);
  auto section = [&](double t) {
    return cross_section_length(R, std::clamp(t, minx + delta, maxx - delta));
  };

  std::vector<double> ts{s1};
  if (width > delta) {
    for (int guard = 0; guard < 100000; ++guard) {
      const double tn = ts.back();
      auto h = [&](double t) { return (t - tn) - section(t) / theta; };
      if (h(s2) < 0.0) break;  // remainder never outgrows its budget
      double a = tn, b = s2;
      if (h(a) >= 0.0) {
        a = tn + delta;
        if (h(a) >= 0.0) break;  // degenerate: no usable root
      }
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        if (h(mid) < 0.0)
          a = mid;
        else
          b = mid;
      }
      const double root = 0.5 * (a + b);
      if (root >= s2 - delta) break;
      ts.push_back(root);
    }
    // A final slab thinner than its own width budget joins its predecessor.
    if (ts.size() >= 2 && (s2 - ts.back()) < section(s2) / theta - delta) ts.pop_back();
  }

  std::vector<Polygon> pieces;
  std::vector<Chord> cuts;
  Polygon rest = R;
  for (size_t k = 1; k < ts.size(); ++k) {
    const auto seg = single_cross_section(rest, ts[k]);
    if (!seg) throw Error(Err::ConstructionFailed, "slab cut is not a single segment");
    SplitResult split = split_by_chord(rest, seg->a, seg->b);
    const bool q1_left = split.q1.bbox().hi.x <= ts[k] + rest.eps();
    pieces.push_back(q1_left ? split.q1 : split.q2);
    rest = q1_left ? split.q2 : split.q1;
    cuts.push_back(Chord{seg->a, seg->b});
  }
  pieces.push_back(rest);

  for (const Polygon& piece : pieces)
    out.partition.pieces.push_back(rotate_polygon(piece, -rot));
  for (const Chord& c : cuts) out.partition.cuts.push_back(rotate_chord(c, -rot));

  out.omega_min = std::numeric_limits<double>::max();
  std::vector<std::pair<Disk, double>> measures;
  for (const Polygon& piece : out.partition.pieces) {
    const Disk disk = inscribed_disk(piece);
    const double d = intrinsic_diameter(piece).d;
    measures.emplace_back(disk, d);
    if (d > 0.0) out.omega_min = std::min(out.omega_min, disk.radius / d);
  }
  if (out.partition.pieces.empty()) out.omega_min = 0.0;
  for (size_t i = 0; i < out.partition.pieces.size(); ++i) {
    RotundCert c;
    c.omega = out.omega_min;
    c.disk = measures[i].first;
    c.d = measures[i].second;
    c.pass = c.disk.radius >= out.omega_min * c.d - 1e-9 * c.d;
    out.certs.push_back(c);
  }
  return out;
}

namespace {

struct TrimResult {
  Polygon core;
  std::vector<Polygon> triangles;
  std::vector<Chord> cuts;
};

// Cut an isosceles triangle at every vertex sharper than pi/4, apex at the
// vertex and legs along the incident edges, keeping the total trimmed
// boundary within the epsilon budget.
TrimResult trim_sharp(const Polygon& P, double epsilon) {
  std::vector<int> sharp;
  for (int i = 0; i < P.size(); ++i) {
    if (P.interior_angle(i) < 0.25 * kPi - 1e-9) sharp.push_back(i);
  }
  if (sharp.empty()) return TrimResult{P, {}, {}};

  const double budget = epsilon / (3.0 * static_cast<double>(sharp.size()));
  TrimResult out;
  std::vector<Vec2> ring;
  for (int i = 0; i < P.size(); ++i) {
    if (!std::binary_search(sharp.begin(), sharp.end(), i)) {
      ring.push_back(P[i]);
      continue;
    }
    const Vec2 v = P[i];
    const Vec2 prev = P.vertex(i - 1);
    const Vec2 next = P.vertex(i + 1);
    const double ell =
        std::min({budget, dist(prev, v) / 3.0, dist(next, v) / 3.0});
    const Vec2 a = v + ell * normalized(prev - v);
    const Vec2 b = v + ell * normalized(next - v);
    ring.push_back(a);
    ring.push_back(b);
    out.triangles.push_back(Polygon::validate({a, v, b}));
    out.cuts.push_back(Chord{a, b});
  }
  out.core = Polygon::validate(std::move(ring));
  return out;
}

}  // namespace

RotundDecomposition decompose_rotund(const Polygon& P, const SemiconvexCert& cert,
                                     const RotundPipelineParams& params) {
  RotundDecomposition out;
  out.partition.input = P;
  const double vtheta_check =
      params.vartheta_check > 0.0 ? params.vartheta_check : vartheta_bar_of(params.vartheta);
  out.vartheta_used = vtheta_check;

  auto run_core = [&](const Polygon& core0) {
    TrimResult trim = trim_sharp(core0, params.epsilon);
    for (auto& t : trim.triangles) out.partition.exceptional.push_back(t);
    for (auto& c : trim.cuts) out.partition.cuts.push_back(c);
    SlabResult slab = slab_partition_convex(trim.core, params.theta);
    for (auto& piece : slab.partition.pieces) out.partition.pieces.push_back(piece);
    for (auto& c : slab.partition.cuts) out.partition.cuts.push_back(c);
  };

  // Whether the end piece side of the cut satisfies the base-angle
  // criterion that backs its semiconvexity.
  auto check_attachment = [&](const Segment& seg, const Polygon& piece) {
    const Chord chord{seg.a, seg.b};
    try {
      SplitResult s = split_by_chord(P, seg.a, seg.b);
      const double rel = std::abs(s.q1.area() - piece.area()) /
                         std::max({s.q1.area(), piece.area(), 1e-300});
      const QSide side = rel < 1e-6 ? QSide::Q1 : QSide::Q2;
      if (!check_part_seg_criterion(P, chord, params.alpha, side)) out.part_seg_ok = false;
    } catch (const Error&) {
      out.part_seg_ok = false;
    }
  };

  if (P.is_convex()) {
    run_core(P);
  } else {
    EndSplit es = split_ends(P, params.vartheta, cert);
    if (es.trivial) {
      out.trivial = true;
      out.partition.pieces.push_back(P);
    } else {
      if (es.p1) {
        out.partition.pieces.push_back(*es.p1);
        out.partition.cuts.push_back(Chord{es.s1->a, es.s1->b});
        check_attachment(*es.s1, *es.p1);
      }
      run_core(es.pmid);
      if (es.p2) {
        out.partition.pieces.push_back(*es.p2);
        out.partition.cuts.push_back(Chord{es.s2->a, es.s2->b});
        check_attachment(*es.s2, *es.p2);
      }
    }
  }

  out.omega_min = std::numeric_limits<double>::max();
  for (const Polygon& piece : out.partition.pieces) {
    out.semiconvex_certs.push_back(certify_semiconvex(piece, vtheta_check));
    RotundCert rc;
    if (params.omega_check > 0.0) {
      rc = certify_rotund(piece, params.omega_check);
    } else {
      rc = certify_rotund(piece, 0.0);
      rc.omega = rc.d > 0.0 ? rc.disk.radius / rc.d : 0.0;
    }
    if (rc.d > 0.0) out.omega_min = std::min(out.omega_min, rc.disk.radius / rc.d);
    out.rotund_certs.push_back(rc);
  }
  if (out.partition.pieces.empty()) out.omega_min = 0.0;
  return out;
}

PipelineResult decompose_polygon(const Polygon& P, double theta, double eta,
                                 double epsilon_rel) {
  if (!(theta > 0.0) || theta > 1.0) throw Error(Err::BadInput, "theta must lie in (0,1]");
  if (!(epsilon_rel > 0.0)) throw Error(Err::BadInput, "epsilon must be positive");
  const double theta_int = 0.25 * theta;

  PipelineResult out;
  out.params = SemiconvexParams::from_theta(theta_int, eta);
  out.partition.input = P;
  SemiconvexDecomposition sc = decompose_semiconvex(P, out.params);
  out.partition.cuts = sc.partition.cuts;

  const double eps_total = epsilon_rel * P.boundary_length();
  const size_t n = sc.partition.pieces.size();
  out.omega_min = std::numeric_limits<double>::max();
  for (size_t i = 0; i < n; ++i) {
    RotundPipelineParams rp;
    rp.theta = theta_int;
    rp.vartheta = out.params.piece_vartheta;
    rp.epsilon = eps_total / static_cast<double>(n);
    rp.alpha = out.params.alpha;
    RotundDecomposition rd = decompose_rotund(sc.partition.pieces[i], sc.certs[i], rp);
    for (auto& piece : rd.partition.pieces) out.partition.pieces.push_back(std::move(piece));
    for (auto& c : rd.partition.cuts) out.partition.cuts.push_back(c);
    for (auto& ex : rd.partition.exceptional)
      out.partition.exceptional.push_back(std::move(ex));
    for (auto& c : rd.semiconvex_certs) out.semiconvex_certs.push_back(std::move(c));
    for (auto& c : rd.rotund_certs) out.rotund_certs.push_back(c);
    out.omega_min = std::min(out.omega_min, rd.omega_min);
    out.vartheta_used = rd.vartheta_used;
    out.part_seg_ok = out.part_seg_ok && rd.part_seg_ok;
  }
  if (out.partition.pieces.empty()) out.omega_min = 0.0;
  return out;
}

}  // namespace johncut
