#include "johncut/john.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>

#include "johncut/extents.h"
#include "johncut/predicates.h"
#include "johncut/tubes.h"

namespace johncut {

namespace {

constexpr double kPi = std::numbers::pi;

struct Bend {
  Vec2 v;
  double t = 0;       // arclength from the curve start
  double sigma = 0;   // turn sign
  Vec2 nu_minus, nu_plus;  // unit normals into the open side
};

// Geodesic bends with their open-side normals; collinear waypoints are
// dropped. The open side is the outside of the turn: a taut path wraps
// its obstacle on the inside of the turn.
std::vector<Bend> geodesic_bends(const GeodesicPath& path) {
  std::vector<Bend> bends;
  const auto& w = path.waypoints;
  for (size_t i = 1; i + 1 < w.size(); ++i) {
    const Vec2 um = normalized(w[i] - w[i - 1]);
    const Vec2 up = normalized(w[i + 1] - w[i]);
    const double cr = cross(um, up);
    if (std::abs(cr) < 1e-12) continue;
    Bend b;
    b.v = w[i];
    b.t = path.t[i];
    b.sigma = cr > 0 ? 1.0 : -1.0;
    b.nu_minus = b.sigma * perp_cw(um);
    b.nu_plus = b.sigma * perp_cw(up);
    bends.push_back(b);
  }
  return bends;
}

Vec2 open_bisector(const Bend& b) {
  const Vec2 s = b.nu_minus + b.nu_plus;
  if (norm(s) < 1e-9) return b.nu_minus;
  return normalized(s);
}

std::vector<Vec2> arc_points(Vec2 center, double radius, Vec2 from_dir, Vec2 to_dir) {
  const double a0 = angle_of(from_dir);
  double beta = std::remainder(angle_of(to_dir) - a0, 2.0 * kPi);
  const int steps = std::max(4, static_cast<int>(std::ceil(std::abs(beta) / (kPi / 36.0))));
  std::vector<Vec2> pts;
  pts.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const double a = a0 + beta * k / steps;
    pts.push_back(center + radius * Vec2{std::cos(a), std::sin(a)});
  }
  return pts;
}

// First boundary hit of the ray origin + s*dir, s > 0.
std::optional<Vec2> ray_first_hit(const Polygon& P, Vec2 origin, Vec2 dir, double s_min) {
  double best = std::numeric_limits<double>::max();
  for (int i = 0; i < P.size(); ++i) {
    const Vec2 a = P[i];
    const Vec2 b = P.vertex(i + 1);
    const Vec2 e = b - a;
    const double denom = cross(dir, e);
    if (std::abs(denom) < 1e-300) continue;
    const double s = cross(a - origin, e) / denom;
    const double u = cross(a - origin, dir) / denom;
    if (s > s_min && u >= -1e-12 && u <= 1.0 + 1e-12 && s < best) best = s;
  }
  if (best == std::numeric_limits<double>::max()) return std::nullopt;
  return origin + best * dir;
}

bool segment_in_rect(Vec2 a, double w, double ylo, double yhi) {
  return a.x >= -w && a.x <= w && a.y >= ylo && a.y <= yhi;
}

struct Diamond {
  Vec2 c;
  double h = 0;  // half diagonal; interior is |x-cx|+|y-cy| < h
};

double diamond_dist(const Diamond& d, Vec2 q) {
  return std::abs(q.x - d.c.x) + std::abs(q.y - d.c.y) - d.h;
}

// Whether the open segment crosses the diamond interior with positive
// length. |x|+|y|-h is convex piecewise linear along the segment, so its
// minimum sits at an endpoint or where one coordinate difference is zero.
bool segment_crosses_diamond(const Diamond& d, Vec2 a, Vec2 b, double tol) {
  double ts[4] = {0.0, 1.0, 0.0, 0.0};
  int nt = 2;
  const Vec2 e = b - a;
  if (std::abs(e.x) > 1e-300) {
    const double t = (d.c.x - a.x) / e.x;
    if (t > 0.0 && t < 1.0) ts[nt++] = t;
  }
  if (std::abs(e.y) > 1e-300) {
    const double t = (d.c.y - a.y) / e.y;
    if (t > 0.0 && t < 1.0) ts[nt++] = t;
  }
  double fmin = std::numeric_limits<double>::max();
  for (int k = 0; k < nt; ++k) fmin = std::min(fmin, diamond_dist(d, a + ts[k] * e));
  return fmin < -tol;
}

// Shortest path from a to b through the corridor of one geodesic bend:
// the rectangle around the chord from the bend vertex across the passage,
// minus clearance diamonds at nearby concave vertices. Realized as a
// visibility graph over diamond corners and polygon vertices.
std::vector<Vec2> corridor_path(const Polygon& P, Vec2 a, Vec2 b, const Bend& bend,
                                double t_next, double vartheta) {
  const double eps = P.eps();
  const Vec2 bis = open_bisector(bend);
  const auto hit = ray_first_hit(P, bend.v, bis, 10.0 * eps);
  if (!hit) throw Error(Err::ConstructionFailed, "corridor chord has no far endpoint");
  const double d = dist(bend.v, *hit);
  const double phi = 0.5 * kPi - angle_of(*hit - bend.v);
  auto to_local = [&](Vec2 q) { return rotate(q - bend.v, phi); };
  auto to_world = [&](Vec2 q) { return rotate(q, -phi) + bend.v; };

  const Vec2 al = to_local(a);
  const Vec2 bl = to_local(b);
  const double tt = 2.0 * vartheta * vartheta;
  double w = std::max({tt * t_next, std::abs(al.x), std::abs(bl.x)}) + 10.0 * eps;
  const double ylo = std::min({0.0, al.y, bl.y}) - 0.05 * (d + w) - 10.0 * eps;
  const double yhi = std::max({d, al.y, bl.y}) + 0.05 * (d + w) + 10.0 * eps;

  std::vector<Diamond> diamonds;
  auto add_diamond = [&](Vec2 local) {
    const double l = std::max(0.0, bend.t + local.y);
    diamonds.push_back(Diamond{local, tt * l});
  };
  add_diamond(Vec2{0.0, 0.0});
  add_diamond(Vec2{0.0, d});
  for (int ci : P.concave_indices()) {
    const Vec2 q = to_local(P[ci]);
    if (dist(q, Vec2{0, 0}) <= 10.0 * eps || dist(q, Vec2{0, d}) <= 10.0 * eps) continue;
    if (segment_in_rect(q, w + eps, ylo - eps, yhi + eps)) add_diamond(q);
  }

  std::vector<Vec2> nodes{al, bl};
  for (const Diamond& dm : diamonds) {
    for (const Vec2 off : {Vec2{dm.h, 0}, Vec2{-dm.h, 0}, Vec2{0, dm.h}, Vec2{0, -dm.h}})
      nodes.push_back(dm.c + off);
  }
  for (const Vec2& v : P.verts()) {
    const Vec2 q = to_local(v);
    if (segment_in_rect(q, w, ylo, yhi)) nodes.push_back(q);
  }
  std::vector<int> keep;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i < 2 || (segment_in_rect(nodes[i], w, ylo, yhi) && P.contains(to_world(nodes[i]))))
      keep.push_back(static_cast<int>(i));
  }

  const int n = static_cast<int>(keep.size());
  auto edge_ok = [&](Vec2 p, Vec2 q) {
    if (!P.contains_segment(to_world(p), to_world(q))) return false;
    for (const Diamond& dm : diamonds) {
      if (segment_crosses_diamond(dm, p, q, 10.0 * eps)) return false;
    }
    return true;
  };

  std::vector<double> distv(n, std::numeric_limits<double>::max());
  std::vector<int> prev(n, -1);
  distv[0] = 0.0;
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<>> pq;
  pq.emplace(0.0, 0);
  while (!pq.empty()) {
    auto [dd, i] = pq.top();
    pq.pop();
    if (dd > distv[i]) continue;
    if (i == 1) break;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double len = dist(nodes[keep[i]], nodes[keep[j]]);
      if (distv[i] + len >= distv[j]) continue;
      if (!edge_ok(nodes[keep[i]], nodes[keep[j]])) continue;
      distv[j] = distv[i] + len;
      prev[j] = i;
      pq.emplace(distv[j], j);
    }
  }
  if (prev[1] < 0 && distv[1] == std::numeric_limits<double>::max())
    throw Error(Err::ConstructionFailed, "corridor is blocked");
  std::vector<Vec2> path;
  for (int i = 1; i != -1; i = prev[i]) {
    path.push_back(to_world(nodes[keep[i]]));
    if (i == 0) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

double polyline_length(const std::vector<Vec2>& pts) {
  double len = 0;
  for (size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
  return len;
}

}  // namespace

std::vector<Vec2> JohnCurve::polyline() const {
  std::vector<Vec2> pts;
  for (const CurvePiece& piece : pieces) {
    for (const Vec2& q : piece.pts) {
      if (!pts.empty() && dist(pts.back(), q) < 1e-15) continue;
      pts.push_back(q);
    }
  }
  return pts;
}

JohnCurve build_john_curve(const Polygon& P, double vartheta, double omega, Vec2 x, Vec2 p) {
  (void)omega;
  if (!(vartheta > 0.0) || !(vartheta < 1.0))
    throw Error(Err::BadInput, "vartheta must lie in (0,1)");
  if (!P.contains(x) || !P.contains(p))
    throw Error(Err::PointOutside, "curve endpoints must lie in the polygon");

  JohnCurve out;
  out.base = geodesic_distance(P, x, p);
  const std::vector<Bend> bends = geodesic_bends(out.base);
  const double tt = 2.0 * vartheta * vartheta;

  if (bends.empty()) {
    out.pieces.push_back(CurvePiece{"segment", {x, p}});
    out.length = dist(x, p);
    out.c_hat = out.base.length > 0 ? out.length / out.base.length : 1.0;
    return out;
  }

  const size_t m = bends.size();
  std::vector<Vec2> wm(m), wp(m);
  for (size_t i = 0; i < m; ++i) {
    const double r = tt * bends[i].t;
    wm[i] = bends[i].v + r * bends[i].nu_minus;
    wp[i] = bends[i].v + r * bends[i].nu_plus;
    if (!P.contains(wm[i]) || !P.contains(wp[i]))
      throw Error(Err::ConstructionFailed, "offset point left the polygon");
  }
  const double t_total = out.base.length;
  const Vec2 w_end = p + tt * t_total * bends[m - 1].nu_plus;
  if (!P.contains(w_end))
    throw Error(Err::ConstructionFailed, "terminal offset point left the polygon");

  // Straight links between consecutive offset points; a link that exits
  // the polygon is rerouted through its bend corridor.
  auto link = [&](Vec2 a, Vec2 b, const std::string& label, size_t bend_idx,
                  double t_next) {
    if (dist(a, b) < 1e-15) return;
    if (P.contains_segment(a, b)) {
      out.pieces.push_back(CurvePiece{label, {a, b}});
      return;
    }
    std::vector<Vec2> path = corridor_path(P, a, b, bends[bend_idx], t_next, vartheta);
    out.pieces.push_back(CurvePiece{"corridor", std::move(path)});
  };

  link(x, wm[0], "segment", 0, bends[0].t);
  for (size_t i = 0; i < m; ++i) {
    const double r = tt * bends[i].t;
    if (r > P.eps()) {
      std::vector<Vec2> arc = arc_points(bends[i].v, r, bends[i].nu_minus, bends[i].nu_plus);
      for (size_t k = 1; k < arc.size(); ++k) {
        if (!P.contains_segment(arc[k - 1], arc[k]))
          throw Error(Err::ConstructionFailed, "bend arc left the polygon");
      }
      out.pieces.push_back(CurvePiece{"arc", std::move(arc)});
    }
    if (i + 1 < m) {
      link(wp[i], wm[i + 1], i == 0 ? "segment" : "helix", i, bends[i + 1].t);
    }
  }
  link(wp[m - 1], w_end, "segment", m - 1, t_total);
  out.pieces.push_back(CurvePiece{"terminal", {w_end, p}});

  out.length = polyline_length(out.polyline());
  out.c_hat = out.base.length > 0 ? out.length / out.base.length : 1.0;
  return out;
}

CarrotCheck verify_carrot(const Polygon& P, const std::vector<Vec2>& curve, double rho,
                          int n_samples) {
  if (curve.size() < 2) throw Error(Err::EmptyCurve, "curve needs at least two points");
  if (!(rho > 0.0) || !(rho < 1.0)) throw Error(Err::BadInput, "rho must lie in (0,1)");
  std::vector<double> s(curve.size(), 0.0);
  for (size_t i = 1; i < curve.size(); ++i) s[i] = s[i - 1] + dist(curve[i - 1], curve[i]);
  const double L = s.back();
  if (L <= 0.0) throw Error(Err::EmptyCurve, "curve has no length");

  const double diag = P.bbox().diagonal();
  const double tol = 1e-7 * diag + P.eps();
  std::vector<double> params(s.begin(), s.end());
  const int n = std::max(2, n_samples);
  for (int k = 0; k < n; ++k) params.push_back(L * k / (n - 1));
  std::sort(params.begin(), params.end());

  CarrotCheck out;
  out.worst_margin = std::numeric_limits<double>::max();
  size_t seg = 1;
  for (double t : params) {
    while (seg + 1 < curve.size() && s[seg] < t) ++seg;
    const double den = s[seg] - s[seg - 1];
    const double u = den > 0 ? std::clamp((t - s[seg - 1]) / den, 0.0, 1.0) : 0.0;
    const Vec2 q = curve[seg - 1] + u * (curve[seg] - curve[seg - 1]);
    const double bd = P.boundary_distance(q);
    if (!P.contains(q)) {
      if (bd > tol) throw Error(Err::CurveExitsPolygon, "curve point left the polygon");
      const double margin = -bd - rho * t;
      if (margin < out.worst_margin) {
        out.worst_margin = margin;
        out.argmin_t = t;
      }
      continue;
    }
    const double margin = bd - rho * t;
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.argmin_t = t;
    }
  }
  out.pass = out.worst_margin >= -tol;
  return out;
}

CarrotCheck verify_carrot(const Polygon& P, const JohnCurve& curve, double rho,
                          int n_samples) {
  return verify_carrot(P, curve.polyline(), rho, n_samples);
}

namespace {

std::vector<Vec2> offset_geodesic_curve(const Polygon& P, Vec2 x, Vec2 p, double vartheta) {
  const GeodesicPath path = geodesic_distance(P, x, p);
  const std::vector<Bend> bends = geodesic_bends(path);
  if (bends.empty()) return {x, p};
  const double tt = 2.0 * vartheta * vartheta;
  std::vector<Vec2> pts{x};
  for (const Bend& b : bends) {
    const Vec2 dir = open_bisector(b);
    double delta = tt * b.t;
    Vec2 w = b.v;
    for (int k = 0; k < 40; ++k) {
      const Vec2 cand = b.v + delta * dir;
      if (P.strictly_contains(cand) && P.contains_segment(pts.back(), cand)) {
        w = cand;
        break;
      }
      delta *= 0.5;
    }
    pts.push_back(w);
  }
  if (!P.contains_segment(pts.back(), p)) {
    std::vector<Vec2> raw = path.waypoints;
    return raw;
  }
  pts.push_back(p);
  return pts;
}

std::vector<Vec2> sample_points(const Polygon& P, int n, std::mt19937& rng) {
  const BBox& bb = P.bbox();
  const double diag = bb.diagonal();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto draw_uniform = [&]() -> std::optional<Vec2> {
    for (int k = 0; k < 400; ++k) {
      const Vec2 q{bb.lo.x + unif(rng) * (bb.hi.x - bb.lo.x),
                   bb.lo.y + unif(rng) * (bb.hi.y - bb.lo.y)};
      if (P.strictly_contains(q)) return q;
    }
    return std::nullopt;
  };

  std::vector<Vec2> pts;
  const int n_uniform = n / 2;
  const int n_boundary = n / 4;
  const double L = P.boundary_length();
  while (static_cast<int>(pts.size()) < n_uniform) {
    const auto q = draw_uniform();
    if (!q) break;
    pts.push_back(*q);
  }
  for (int k = 0; k < n_boundary; ++k) {
    const double u = unif(rng) * L;
    const Vec2 q = P.boundary_point(u);
    double acc = 0;
    Vec2 dir{1, 0};
    for (int i = 0; i < P.size(); ++i) {
      const double el = dist(P[i], P.vertex(i + 1));
      if (u <= acc + el || i == P.size() - 1) {
        dir = normalized(P.vertex(i + 1) - P[i]);
        break;
      }
      acc += el;
    }
    const Vec2 inward = perp_ccw(dir);
    double delta = diag * std::pow(10.0, -4.0 + 2.0 * unif(rng));
    bool placed = false;
    for (int it = 0; it < 30; ++it) {
      const Vec2 cand = q + delta * inward;
      if (P.strictly_contains(cand)) {
        pts.push_back(cand);
        placed = true;
        break;
      }
      delta *= 0.5;
    }
    if (!placed) {
      if (const auto q2 = draw_uniform()) pts.push_back(*q2);
    }
  }
  const auto& cc = P.concave_indices();
  while (static_cast<int>(pts.size()) < n) {
    if (cc.empty()) {
      if (const auto q = draw_uniform())
        pts.push_back(*q);
      else
        break;
      continue;
    }
    const int ci = cc[static_cast<size_t>(unif(rng) * cc.size()) % cc.size()];
    const Vec2 v = P[ci];
    const Vec2 um = normalized(P.vertex(ci - 1) - v);
    const Vec2 up = normalized(P.vertex(ci + 1) - v);
    Vec2 dir = -1.0 * (um + up);
    if (norm(dir) < 1e-9) dir = perp_ccw(um);
    dir = rotate(normalized(dir), 0.6 * (unif(rng) - 0.5));
    double delta = diag * std::pow(10.0, -4.0 + 2.0 * unif(rng));
    bool placed = false;
    for (int it = 0; it < 30; ++it) {
      const Vec2 cand = v + delta * dir;
      if (P.strictly_contains(cand)) {
        pts.push_back(cand);
        placed = true;
        break;
      }
      delta *= 0.5;
    }
    if (!placed) {
      if (const auto q = draw_uniform())
        pts.push_back(*q);
      else
        break;
    }
  }
  return pts;
}

struct Attempt {
  CurveMode mode;
  std::vector<Vec2> curve;
  std::vector<std::string> labels;
};

std::vector<Attempt> candidate_curves(const Polygon& P, Vec2 x, Vec2 center, double rho) {
  std::vector<Attempt> cands;
  if (P.contains_segment(x, center)) {
    cands.push_back(Attempt{CurveMode::Straight, {x, center}, {"segment"}});
  }
  const double vt = std::min(0.5, std::cbrt(std::max(rho, 1e-12)));
  try {
    JohnCurve jc = build_john_curve(P, vt, 0.0, x, center);
    Attempt a;
    a.mode = CurveMode::Constructed;
    a.curve = jc.polyline();
    for (const CurvePiece& piece : jc.pieces) a.labels.push_back(piece.label);
    cands.push_back(std::move(a));
  } catch (const Error&) {
  }
  for (double v : {vt, 0.25 * vt}) {
    std::vector<Vec2> og = offset_geodesic_curve(P, x, center, v);
    if (og.size() >= 2)
      cands.push_back(Attempt{CurveMode::OffsetGeodesic, std::move(og), {"geodesic-offset"}});
  }
  return cands;
}

}  // namespace

JohnCert certify_john(const Polygon& P, double rho, const JohnConfig& cfg) {
  if (!(rho > 0.0) || !(rho < 1.0)) throw Error(Err::BadInput, "rho must lie in (0,1)");
  JohnCert cert;
  cert.rho = rho;
  cert.center = inscribed_disk(P).center;
  const int n_points = cfg.n_points * std::max(1, cfg.stress);
  const int n_carrot = cfg.carrot_samples * std::max(1, cfg.stress);
  std::mt19937 rng(cfg.seed);
  const std::vector<Vec2> pts = sample_points(P, n_points, rng);

  cert.pass = true;
  cert.worst_margin = std::numeric_limits<double>::max();
  for (const Vec2& x : pts) {
    if (dist(x, cert.center) < 10.0 * P.eps()) continue;
    JohnSample sample;
    sample.x = x;
    bool have = false;
    for (Attempt& att : candidate_curves(P, x, cert.center, rho)) {
      CarrotCheck chk;
      try {
        chk = verify_carrot(P, att.curve, rho, n_carrot);
      } catch (const Error&) {
        continue;
      }
      if (!have || chk.worst_margin > sample.worst_margin) {
        sample.mode = att.mode;
        sample.curve = std::move(att.curve);
        sample.piece_labels = std::move(att.labels);
        sample.worst_margin = chk.worst_margin;
        sample.argmin_t = chk.argmin_t;
        sample.pass = chk.pass;
        have = true;
      }
      if (have && sample.pass) break;
    }
    if (!have) {
      sample.pass = false;
      sample.worst_margin = -std::numeric_limits<double>::max();
    }
    cert.pass = cert.pass && sample.pass;
    cert.worst_margin = std::min(cert.worst_margin, sample.worst_margin);
    cert.samples.push_back(std::move(sample));
  }
  if (cert.samples.empty()) cert.worst_margin = 0.0;
  return cert;
}

double john_constant(const Polygon& P, const JohnConfig& cfg) {
  const Vec2 center = inscribed_disk(P).center;
  const int n_points = cfg.n_points * std::max(1, cfg.stress);
  const int n_carrot = cfg.carrot_samples * std::max(1, cfg.stress);
  std::mt19937 rng(cfg.seed);
  const std::vector<Vec2> pts = sample_points(P, n_points, rng);
  const double tol = 1e-7 * P.bbox().diagonal() + P.eps();

  double rho_piece = 0.999;
  for (const Vec2& x : pts) {
    if (dist(x, center) < 10.0 * P.eps()) continue;
    double rho_sample = 0.0;
    for (const Attempt& att : candidate_curves(P, x, center, 0.05)) {
      std::vector<double> s(att.curve.size(), 0.0);
      for (size_t i = 1; i < att.curve.size(); ++i)
        s[i] = s[i - 1] + dist(att.curve[i - 1], att.curve[i]);
      const double L = s.back();
      if (L <= 0.0) continue;
      double rho_curve = 0.999;
      bool exits = false;
      const int n = std::max(2, n_carrot);
      for (int k = 0; k < n + static_cast<int>(s.size()) && !exits; ++k) {
        const double t = k < n ? L * k / (n - 1) : s[k - n];
        size_t seg = 1;
        while (seg + 1 < att.curve.size() && s[seg] < t) ++seg;
        const double den = s[seg] - s[seg - 1];
        const double u = den > 0 ? std::clamp((t - s[seg - 1]) / den, 0.0, 1.0) : 0.0;
        const Vec2 q = att.curve[seg - 1] + u * (att.curve[seg] - att.curve[seg - 1]);
        const double bd = P.boundary_distance(q);
        if (!P.contains(q) && bd > tol) {
          exits = true;
          break;
        }
        const double dq = P.contains(q) ? bd : 0.0;
        if (t > 1e-12 * L) rho_curve = std::min(rho_curve, (dq + tol) / t);
      }
      if (!exits) rho_sample = std::max(rho_sample, rho_curve);
    }
    rho_piece = std::min(rho_piece, rho_sample);
  }
  return std::clamp(std::floor(rho_piece / 1e-3) * 1e-3, 0.0, 0.999);
}

std::pair<SemiconvexCert, RotundCert> john_converse_check(const Polygon& P, double rho,
                                                          const CandidateConfig& search) {
  return {certify_semiconvex(P, 0.25 * rho, search), certify_rotund(P, 0.25 * rho)};
}

bool plump_check(const Polygon& P, const JohnCert& cert, Vec2 x, double r) {
  if (!P.contains(x)) throw Error(Err::PointOutside, "search center must lie in the polygon");
  if (!(r > 0.0)) throw Error(Err::BadInput, "radius must be positive");
  double far = 0.0;
  for (const Vec2& v : P.verts()) far = std::max(far, dist(x, v));
  if (far <= r) throw Error(Err::BallCoversDomain, "ball covers the whole polygon");

  auto value = [&](Vec2 z) -> double {
    if (dist(z, x) > r || !P.contains(z)) return -std::numeric_limits<double>::max();
    return P.boundary_distance(z);
  };
  Vec2 best = x;
  double best_f = value(x);
  const int n = 32;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Vec2 z{x.x - r + 2.0 * r * i / n, x.y - r + 2.0 * r * j / n};
      const double f = value(z);
      if (f > best_f) {
        best = z;
        best_f = f;
      }
    }
  }
  double step = 2.0 * r / n;
  while (step > 1e-6 * r) {
    bool moved = false;
    for (const Vec2 dir : {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1}}) {
      const Vec2 z = best + step * dir;
      const double f = value(z);
      if (f > best_f) {
        best = z;
        best_f = f;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  const double tol = 1e-9 * r + P.eps();
  return best_f >= 0.5 * cert.rho * r - tol;
}

namespace {

// Ring of P with points a and b present as vertices, along with their
// indices.
std::vector<Vec2> ring_with_points(const Polygon& P, Vec2 a, Vec2 b, int* ia, int* ib) {
  std::vector<Vec2> ring = P.verts();
  auto insert_point = [&](Vec2 q) -> int {
    for (size_t i = 0; i < ring.size(); ++i) {
      if (dist(ring[i], q) <= 10.0 * P.eps()) return static_cast<int>(i);
    }
    for (size_t i = 0; i < ring.size(); ++i) {
      const Vec2 u = ring[i];
      const Vec2 v = ring[(i + 1) % ring.size()];
      if (point_segment_dist(q, u, v) <= 10.0 * P.eps()) {
        ring.insert(ring.begin() + static_cast<long>(i) + 1, q);
        return static_cast<int>(i) + 1;
      }
    }
    return -1;
  };
  *ia = insert_point(a);
  if (*ia < 0) return {};
  *ib = insert_point(b);
  if (*ib < 0) return {};
  if (*ib <= *ia && dist(ring[static_cast<size_t>(*ib)], a) > 10.0 * P.eps()) {
    // b was inserted before a; recompute a's index.
    for (size_t i = 0; i < ring.size(); ++i) {
      if (dist(ring[i], a) <= 10.0 * P.eps()) {
        *ia = static_cast<int>(i);
        break;
      }
    }
  }
  return ring;
}

// Walks the ring from ia to ib in the given direction, inclusive.
std::vector<Vec2> ring_walk(const std::vector<Vec2>& ring, int ia, int ib, int dir) {
  std::vector<Vec2> out;
  const int n = static_cast<int>(ring.size());
  for (int i = ia;; i = (i + dir + n) % n) {
    out.push_back(ring[static_cast<size_t>(i)]);
    if (i == ib) break;
    if (static_cast<int>(out.size()) > n + 1) return {};
  }
  return out;
}

double walk_length(const std::vector<Vec2>& pts) { return polyline_length(pts); }

// The side of the ring between a and b that runs along the segment [a;b]:
// every vertex on the segment and total length equal to |ab|.
std::vector<Vec2> keep_side(const std::vector<Vec2>& ring, int ia, int ib, Vec2 a, Vec2 b,
                            double tol) {
  const double ab = dist(a, b);
  for (int dir : {1, -1}) {
    std::vector<Vec2> shared = ring_walk(ring, ia, ib, dir);
    if (shared.empty()) continue;
    bool on = walk_length(shared) <= ab * (1.0 + 1e-9) + tol;
    for (const Vec2& q : shared) {
      if (point_segment_dist(q, a, b) > tol) on = false;
    }
    if (on) return ring_walk(ring, ia, ib, -dir);
  }
  return {};
}

bool is_longest_edge(const Polygon& tri, Vec2 a, Vec2 b, double tol) {
  if (tri.size() != 3) return false;
  double longest = 0;
  for (int i = 0; i < 3; ++i) longest = std::max(longest, dist(tri[i], tri.vertex(i + 1)));
  for (int i = 0; i < 3; ++i) {
    const Vec2 u = tri[i];
    const Vec2 v = tri.vertex(i + 1);
    const bool match = (dist(u, a) <= tol && dist(v, b) <= tol) ||
                       (dist(u, b) <= tol && dist(v, a) <= tol);
    if (match) return dist(u, v) >= longest - tol;
  }
  return false;
}

}  // namespace

MergeResult merge_regions(const Polygon& d1, const JohnCert& c1, const Polygon& d2,
                          const JohnCert& c2, const Segment& shared,
                          double min_shared_ratio, const JohnConfig& cfg) {
  (void)c1;
  (void)c2;
  const double tol = 10.0 * std::max(d1.eps(), d2.eps());
  const Vec2 mid = shared.midpoint();
  for (const Polygon* d : {&d1, &d2}) {
    if (!d->on_boundary(shared.a) || !d->on_boundary(shared.b) || !d->on_boundary(mid))
      throw Error(Err::NotAdjacent, "shared segment must lie on both boundaries");
  }
  const double dia1 = euclidean_diameter(d1.verts());
  const double dia2 = euclidean_diameter(d2.verts());
  const bool triangle_glue = is_longest_edge(d1, shared.a, shared.b, tol) ||
                             is_longest_edge(d2, shared.a, shared.b, tol);
  if (!triangle_glue && shared.length() < min_shared_ratio * std::min(dia1, dia2))
    throw Error(Err::SharedTooShort, "shared segment too short for a merge");

  int ia1 = -1, ib1 = -1, ia2 = -1, ib2 = -1;
  const std::vector<Vec2> ring1 = ring_with_points(d1, shared.a, shared.b, &ia1, &ib1);
  const std::vector<Vec2> ring2 = ring_with_points(d2, shared.b, shared.a, &ia2, &ib2);
  if (ring1.empty() || ring2.empty())
    throw Error(Err::NotAdjacent, "shared segment endpoints not on both boundaries");
  const std::vector<Vec2> path1 = keep_side(ring1, ia1, ib1, shared.a, shared.b, tol);
  const std::vector<Vec2> path2 = keep_side(ring2, ia2, ib2, shared.b, shared.a, tol);
  if (path1.empty() || path2.empty())
    throw Error(Err::NotAdjacent, "no boundary side runs along the shared segment");

  std::vector<Vec2> merged_ring(path1.begin(), path1.end());
  for (size_t i = 1; i + 1 < path2.size(); ++i) merged_ring.push_back(path2[i]);

  MergeResult out{Polygon::validate(std::move(merged_ring)), {}, 0.0, true};
  out.rho_merged = john_constant(out.merged, cfg);
  if (out.rho_merged <= 0.0) {
    out.cert = JohnCert{};
    out.cert.center = inscribed_disk(out.merged).center;
    return out;
  }
  out.cert = certify_john(out.merged, out.rho_merged, cfg);
  for (const Polygon* d : {&d1, &d2}) {
    if (d->size() == 3 && is_longest_edge(*d, shared.a, shared.b, tol)) {
      if (out.rho_merged * d->area() > out.merged.area()) out.area_clause = false;
    }
  }
  return out;
}

}  // namespace johncut
