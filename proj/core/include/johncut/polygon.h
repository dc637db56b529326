#pragma once

#include <optional>
#include <vector>

#include "johncut/errors.h"
#include "johncut/geometry.h"

namespace johncut {

// Absolute geometric tolerance. Scale defaults to 1e-9 of the input
// bounding-box diagonal and can be overridden through JOHNCUT_TOL.
struct Tolerance {
  double eps_geom = 0.0;
  static double scale();  // env override or 1e-9
  static Tolerance for_bbox(const BBox& b) { return Tolerance{scale() * b.diagonal()}; }
};

// Closed simple polygon with counter-clockwise vertex ring. Immutable after
// construction; derived quantities are computed once.
class Polygon {
 public:
  Polygon() = default;

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<Vec2>& verts() const { return v_; }
  const Vec2& operator[](int i) const { return v_[i]; }
  const Vec2& vertex(int i) const { return v_[((i % size()) + size()) % size()]; }

  double area() const { return area_; }
  double boundary_length() const { return perim_; }
  const BBox& bbox() const { return bbox_; }
  double eps() const { return eps_; }

  double interior_angle(int i) const;
  bool is_concave(int i) const;  // exact: right turn at vertex i
  const std::vector<int>& concave_indices() const { return concave_; }
  bool is_convex() const { return concave_.empty(); }

  bool contains(Vec2 p) const;           // closed set
  bool strictly_contains(Vec2 p) const;  // open interior
  bool on_boundary(Vec2 p) const;        // exact membership in some edge
  double boundary_distance(Vec2 p) const;

  // True iff the closed segment [a;b] stays inside the closed polygon.
  bool contains_segment(Vec2 a, Vec2 b) const;

  // Containment for a chord whose endpoints lie on the boundary only to
  // within eps (snapped or interpolated points round off their edge). The
  // probe segment is pulled off both endpoints before the exact test.
  bool contains_chord(Vec2 a, Vec2 b) const;

  // Arclength parametrization of the boundary, s in [0, boundary_length).
  Vec2 boundary_point(double s) const;
  double cumulative_length(int vertex_i) const { return cumlen_[vertex_i]; }

  // Index of an edge [v_i, v_{i+1}] containing p exactly, or -1.
  int locate_on_boundary(Vec2 p, double* edge_t = nullptr) const;
  // Nearest boundary point if within eps, otherwise nullopt.
  std::optional<Vec2> snap_to_boundary(Vec2 p) const;
  // Index of a vertex equal to p within eps, or -1.
  int vertex_near(Vec2 p) const;

  // A point strictly inside the polygon (ear of the lowest-leftmost vertex).
  Vec2 interior_point() const;

  // Full validation: duplicate collapse, orientation fix, simplicity check.
  static Polygon validate(std::vector<Vec2> pts);
  // Trusted path for rings produced by chord splitting: collapses duplicates
  // and requires positive area but skips the simplicity sweep.
  static Polygon from_ring(std::vector<Vec2> pts);

 private:
  void finish();  // fills caches; requires CCW simple ring in v_

  std::vector<Vec2> v_;
  double area_ = 0.0;
  double perim_ = 0.0;
  double eps_ = 0.0;
  BBox bbox_;
  std::vector<double> cumlen_;
  std::vector<int> concave_;
};

inline Polygon validate_polygon(std::vector<Vec2> pts) { return Polygon::validate(std::move(pts)); }

inline bool segment_in_polygon(const Polygon& P, const Segment& s) {
  return P.contains_segment(s.a, s.b);
}

double signed_area(const std::vector<Vec2>& ring);

// Cyclic ring comparison used by tests and merge checks.
bool rings_cyclically_equal(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double eps);

}  // namespace johncut
