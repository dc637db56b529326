#pragma once

#include "johncut/polygon.h"

namespace johncut {

// Piecewise-affine shortest path inside a closed simple polygon. Interior
// waypoints are concave vertices; t holds cumulative arclength per waypoint.
struct GeodesicPath {
  std::vector<Vec2> waypoints;
  std::vector<double> t;
  double length = 0.0;
};

GeodesicPath geodesic_distance(const Polygon& P, Vec2 p, Vec2 q);

struct DiameterResult {
  double d = 0.0;
  Vec2 a, b;  // witness pair
};

// Intrinsic diameter, maximized over vertex pairs; exact Euclidean diameter
// for convex polygons.
DiameterResult intrinsic_diameter(const Polygon& P);

// Infimum of geodesic distance from p to points of segment s inside P.
double geodesic_distance_to_segment(const Polygon& P, Vec2 p, const Segment& s);

}  // namespace johncut
