#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace johncut {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline double dist_sq(Vec2 a, Vec2 b) { return norm_sq(a - b); }

inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  return n > 0.0 ? a / n : Vec2{0.0, 0.0};
}

// Counter-clockwise and clockwise quarter turns.
inline Vec2 perp_ccw(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 perp_cw(Vec2 a) { return {a.y, -a.x}; }

inline Vec2 rotate(Vec2 a, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

// Lexicographic order, used for deterministic tie-breaking.
inline bool lex_less(Vec2 a, Vec2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Segment {
  Vec2 a;
  Vec2 b;
  double length() const { return dist(a, b); }
  Vec2 midpoint() const { return 0.5 * (a + b); }
  Vec2 point_at(double t) const { return a + t * (b - a); }
};

struct BBox {
  Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  void expand(Vec2 p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  void expand(const BBox& o) {
    expand(o.lo);
    expand(o.hi);
  }
  double diagonal() const { return dist(lo, hi); }
  bool contains(Vec2 p, double pad = 0.0) const {
    return p.x >= lo.x - pad && p.x <= hi.x + pad && p.y >= lo.y - pad && p.y <= hi.y + pad;
  }
  bool overlaps(const BBox& o, double pad = 0.0) const {
    return lo.x <= o.hi.x + pad && o.lo.x <= hi.x + pad && lo.y <= o.hi.y + pad &&
           o.lo.y <= hi.y + pad;
  }
};

inline BBox bbox_of(const std::vector<Vec2>& pts) {
  BBox b;
  for (const Vec2& p : pts) b.expand(p);
  return b;
}

// Closest point of segment [a;b] to p; t receives the clamped parameter.
inline Vec2 closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b, double* t_out = nullptr) {
  Vec2 d = b - a;
  double len2 = norm_sq(d);
  double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  if (t_out) *t_out = t;
  return a + t * d;
}

inline double point_segment_dist(Vec2 p, Vec2 a, Vec2 b) {
  return dist(p, closest_point_on_segment(p, a, b));
}

}  // namespace johncut
