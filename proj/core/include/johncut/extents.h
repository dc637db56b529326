#pragma once

#include "johncut/polygon.h"

namespace johncut {

// Convex hull in CCW order, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Length of the projection of P onto direction (cos angle, sin angle).
double directional_extent(const Polygon& P, double angle);

struct ExtentResult {
  double min_extent = 0.0;
  double max_extent = 0.0;
  double argmin_angle = 0.0;  // direction along which the minimum is measured
};

// Min extent over all directions (width, via antipodal edge-vertex pairs on
// the hull) and max extent (hull diameter).
ExtentResult min_max_extent(const Polygon& P);
ExtentResult min_max_extent(const std::vector<Vec2>& pts);

// Euclidean diameter of a point set (max pairwise distance on the hull).
double euclidean_diameter(const std::vector<Vec2>& pts);

}  // namespace johncut
