#pragma once

#include "johncut/geometry.h"

namespace johncut {

// Sign of the orientation determinant of (a, b, c): +1 left turn, -1 right
// turn, 0 collinear. Fast floating-point path with a forward error bound,
// exact rational fallback when the bound cannot decide the sign.
int orient_sign(Vec2 a, Vec2 b, Vec2 c);

// Raw double determinant, for magnitude uses only (never for sign decisions).
inline double orient_value(Vec2 a, Vec2 b, Vec2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// True iff p lies on the closed segment [a;b]. Exact.
bool on_segment(Vec2 p, Vec2 a, Vec2 b);

enum class SegX {
  None,     // disjoint
  Proper,   // interiors cross in a single point
  Touch,    // share exactly one point, at least one being an endpoint
  Overlap,  // collinear with a common sub-segment of positive length
};

// Classification of the intersection of closed segments [a;b] and [c;d].
SegX classify_segments(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Intersection point of two properly crossing segments (double precision).
Vec2 proper_intersection_point(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Parameters t in [0,1] along [a;b] of every contact with [c;d]; for
// collinear overlap both overlap endpoints are reported.
void intersection_params(Vec2 a, Vec2 b, Vec2 c, Vec2 d, std::vector<double>& out);

}  // namespace johncut
