#include "johncut/extents.h"

#include <algorithm>
#include <cmath>

#include "johncut/predicates.h"

namespace johncut {

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orient_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && orient_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double directional_extent(const Polygon& P, double angle) {
  Vec2 d{std::cos(angle), std::sin(angle)};
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (const Vec2& v : P.verts()) {
    double t = dot(v, d);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

double euclidean_diameter(const std::vector<Vec2>& pts) {
  std::vector<Vec2> h = convex_hull(pts);
  double best = 0.0;
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = i + 1; j < h.size(); ++j) best = std::max(best, dist(h[i], h[j]));
  return best;
}

ExtentResult min_max_extent(const std::vector<Vec2>& pts) {
  std::vector<Vec2> h = convex_hull(pts);
  ExtentResult r;
  int n = static_cast<int>(h.size());
  if (n < 2) return r;
  if (n == 2) {
    r.max_extent = dist(h[0], h[1]);
    r.min_extent = 0.0;
    r.argmin_angle = angle_of(perp_ccw(h[1] - h[0]));
    return r;
  }
  // Width: for each hull edge, the extent along its normal.
  r.min_extent = std::numeric_limits<double>::max();
  for (int i = 0; i < n; ++i) {
    Vec2 nrm = normalized(perp_ccw(h[(i + 1) % n] - h[i]));
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (const Vec2& p : h) {
      double t = dot(p, nrm);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    if (hi - lo < r.min_extent) {
      r.min_extent = hi - lo;
      r.argmin_angle = angle_of(nrm);
    }
  }
  // Diameter: max pairwise distance over hull vertices.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.max_extent = std::max(r.max_extent, dist(h[i], h[j]));
  return r;
}

ExtentResult min_max_extent(const Polygon& P) { return min_max_extent(P.verts()); }

}  // namespace johncut
