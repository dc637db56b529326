#include "johncut/tubes.h"

#include <cmath>

namespace johncut {

namespace {

void require_eta(double eta) {
  if (!(eta > 0.0) || !(eta < 1.0)) throw Error(Err::InvalidEta, "eta must lie in (0,1)");
}

// Minimum of A s^2 + B s + C over [lo, hi], A >= 0.
double min_quad(double A, double B, double C, double lo, double hi) {
  auto val = [&](double s) { return (A * s + B) * s + C; };
  double best = std::min(val(lo), val(hi));
  if (A > 0.0) {
    double s = -B / (2.0 * A);
    if (s > lo && s < hi) best = std::min(best, val(s));
  }
  return best;
}

// min over t in [t0, t0+len] of |x - (p0 + (t-t0) u)|^2 - (eta t)^2.
double min_margin_growing(Vec2 p0, Vec2 u, double t0, double len, double eta, Vec2 x) {
  Vec2 d = x - p0;
  double A = 1.0 - eta * eta;
  double B = -2.0 * (dot(d, u) + eta * eta * t0);
  double C = norm_sq(d) - eta * eta * t0 * t0;
  return min_quad(A, B, C, 0.0, len);
}

// Radius eta*(m - s) shrinking to zero at s = m.
double min_margin_shrinking(Vec2 p0, Vec2 u, double m, double len, double eta, Vec2 x) {
  Vec2 d = x - p0;
  double A = 1.0 - eta * eta;
  double B = -2.0 * dot(d, u) + 2.0 * eta * eta * m;
  double C = norm_sq(d) - eta * eta * m * m;
  return min_quad(A, B, C, 0.0, len);
}

double cigar_min_margin(Vec2 a, Vec2 b, double eta, Vec2 x) {
  double L = dist(a, b);
  if (L <= 0.0) throw Error(Err::BadInput, "degenerate cigar segment");
  Vec2 u = (b - a) / L;
  double h = 0.5 * L;
  double m1 = min_margin_growing(a, u, 0.0, h, eta, x);
  Vec2 mid = a + h * u;
  double m2 = min_margin_shrinking(mid, u, h, h, eta, x);
  return std::min(m1, m2);
}

}  // namespace

bool cigar_membership(Vec2 a, Vec2 b, double eta, Vec2 x) {
  require_eta(eta);
  return cigar_min_margin(a, b, eta, x) < 0.0;
}

bool cigar_membership_closed(Vec2 a, Vec2 b, double eta, Vec2 x) {
  require_eta(eta);
  return cigar_min_margin(a, b, eta, x) <= 0.0;
}

bool carrot_membership(const std::vector<Vec2>& curve, double eta, Vec2 x) {
  require_eta(eta);
  if (curve.size() < 2) throw Error(Err::EmptyCurve, "carrot needs a curve of positive length");
  double t0 = 0.0;
  double best = std::numeric_limits<double>::max();
  for (size_t i = 0; i + 1 < curve.size(); ++i) {
    double len = dist(curve[i], curve[i + 1]);
    if (len <= 0.0) continue;
    Vec2 u = (curve[i + 1] - curve[i]) / len;
    best = std::min(best, min_margin_growing(curve[i], u, t0, len, eta, x));
    t0 += len;
  }
  if (t0 <= 0.0) throw Error(Err::EmptyCurve, "carrot needs a curve of positive length");
  return best < 0.0;
}

bool visible_region_membership(const Polygon& P, const Segment& vw, double eta, Vec2 x,
                               const VisibleRegionConfig& cfg) {
  require_eta(eta);
  if (!P.contains_segment(vw.a, vw.b))
    throw Error(Err::SegmentNotInPolygon, "chord not contained in polygon");
  if (cigar_min_margin(vw.a, vw.b, eta, x) > 0.0) return false;

  double tproj;
  closest_point_on_segment(x, vw.a, vw.b, &tproj);
  if (P.contains_segment(vw.point_at(tproj), x)) return true;
  if (P.contains_segment(vw.a, x)) return true;
  if (P.contains_segment(vw.b, x)) return true;
  for (int k = 0; k < cfg.n_candidates; ++k) {
    double t = static_cast<double>(k + 1) / (cfg.n_candidates + 1);
    if (P.contains_segment(vw.point_at(t), x)) return true;
  }
  return false;
}

}  // namespace johncut
