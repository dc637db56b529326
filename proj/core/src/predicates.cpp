#include "johncut/predicates.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace johncut {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// (3 + 16 eps) eps with eps = 2^-53, the classic forward error bound for the
// 2x2 orientation determinant evaluated in doubles.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

int orient_exact(Vec2 a, Vec2 b, Vec2 c) {
  // Doubles convert to rationals exactly, so this sign is exact.
  Rational det = (Rational(b.x) - Rational(a.x)) * (Rational(c.y) - Rational(a.y)) -
                 (Rational(b.y) - Rational(a.y)) * (Rational(c.x) - Rational(a.x));
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

}  // namespace

int orient_sign(Vec2 a, Vec2 b, Vec2 c) {
  double detleft = (b.x - a.x) * (c.y - a.y);
  double detright = (b.y - a.y) * (c.x - a.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : orient_exact(a, b, c));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : orient_exact(a, b, c));
    detsum = -detleft - detright;
  } else {
    return det > 0.0 ? 1 : (det < 0.0 ? -1 : orient_exact(a, b, c));
  }
  double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return det > 0.0 ? 1 : -1;
  return orient_exact(a, b, c);
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
  if (orient_sign(a, b, p) != 0) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

SegX classify_segments(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  int o1 = orient_sign(a, b, c);
  int o2 = orient_sign(a, b, d);
  int o3 = orient_sign(c, d, a);
  int o4 = orient_sign(c, d, b);

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegX::Proper;

  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis and compare extents.
    bool use_x = std::abs(b.x - a.x) >= std::abs(b.y - a.y);
    auto coord = [use_x](Vec2 p) { return use_x ? p.x : p.y; };
    double a0 = coord(a), b0 = coord(b), c0 = coord(c), d0 = coord(d);
    double lo1 = std::min(a0, b0), hi1 = std::max(a0, b0);
    double lo2 = std::min(c0, d0), hi2 = std::max(c0, d0);
    double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return SegX::None;
    if (lo == hi) return SegX::Touch;
    return SegX::Overlap;
  }

  // With at least one orientation zero and not fully collinear, any contact
  // must happen at that endpoint.
  bool touch = (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
               (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
  return touch ? SegX::Touch : SegX::None;
}

Vec2 proper_intersection_point(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  double denom = cross(b - a, d - c);
  double t = cross(c - a, d - c) / denom;
  return a + t * (b - a);
}

void intersection_params(Vec2 a, Vec2 b, Vec2 c, Vec2 d, std::vector<double>& out) {
  SegX k = classify_segments(a, b, c, d);
  if (k == SegX::None) return;
  Vec2 ab = b - a;
  double len2 = norm_sq(ab);
  auto param = [&](Vec2 p) { return len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0; };
  switch (k) {
    case SegX::Proper:
      out.push_back(param(proper_intersection_point(a, b, c, d)));
      break;
    case SegX::Touch: {
      if (on_segment(c, a, b)) out.push_back(param(c));
      if (on_segment(d, a, b)) out.push_back(param(d));
      if (on_segment(a, c, d)) out.push_back(0.0);
      if (on_segment(b, c, d)) out.push_back(1.0);
      break;
    }
    case SegX::Overlap: {
      if (on_segment(c, a, b)) out.push_back(param(c));
      if (on_segment(d, a, b)) out.push_back(param(d));
      if (on_segment(a, c, d)) out.push_back(0.0);
      if (on_segment(b, c, d)) out.push_back(1.0);
      break;
    }
    case SegX::None:
      break;
  }
}

}  // namespace johncut
