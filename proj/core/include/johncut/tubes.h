#pragma once

#include "johncut/polygon.h"

namespace johncut {

// Membership in the open eta-cigar of [a;b]: union over t of open balls
// B(gamma(t), eta*min{t, l-t}). Closed-form piecewise quadratic minimization.
bool cigar_membership(Vec2 a, Vec2 b, double eta, Vec2 x);

// Closure of the cigar (used by visible regions).
bool cigar_membership_closed(Vec2 a, Vec2 b, double eta, Vec2 x);

// Membership in the open eta-carrot of a polyline: balls B(gamma(t), eta*t)
// with t the arclength from the curve start.
bool carrot_membership(const std::vector<Vec2>& curve, double eta, Vec2 x);

struct VisibleRegionConfig {
  int n_candidates = 64;  // evenly spaced sight anchors on [v;w]
};

// x lies in the visible region of chord [v;w]: inside the closed cigar and
// seeing some point of [v;w] through P.
bool visible_region_membership(const Polygon& P, const Segment& vw, double eta, Vec2 x,
                               const VisibleRegionConfig& cfg = {});

}  // namespace johncut
