#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "johncut/geodesic.h"
#include "johncut/polygon.h"
#include "johncut/rotund.h"
#include "johncut/semiconvex.h"

namespace johncut {

// A carrot-curve witness from a sample point to the center. Pieces are
// stored as labeled polylines (arcs discretized at <= 5 degree steps);
// label is one of "segment", "arc", "helix", "corridor", "terminal",
// "geodesic-offset".
struct CurvePiece {
  std::string label;
  std::vector<Vec2> pts;
};

struct JohnCurve {
  std::vector<CurvePiece> pieces;
  double length = 0;
  GeodesicPath base;  // guiding geodesic; base.t holds bend arclengths
  double c_hat = 0;   // length / base.length

  std::vector<Vec2> polyline() const;
};

// Assembles the explicit carrot curve from x to the center p: offset
// points at 2*vartheta^2*t around each geodesic bend, connecting arcs
// around the bends, straight chain pieces in between, and a terminal
// segment into p. Chain pieces that leave the polygon are rerouted as
// shortest paths through the bend corridor minus clearance diamonds.
// Convex inputs (no bends) yield the single straight segment.
JohnCurve build_john_curve(const Polygon& P, double vartheta, double omega, Vec2 x, Vec2 p);

struct CarrotCheck {
  bool pass = false;
  double worst_margin = 0;  // min over samples of dist to boundary - rho*t
  double argmin_t = 0;
};

// Samples dist(curve(t), boundary) - rho*t at n arclength-uniform points
// plus every curve vertex; t runs from the start of the curve.
CarrotCheck verify_carrot(const Polygon& P, const std::vector<Vec2>& curve, double rho,
                          int n_samples);
CarrotCheck verify_carrot(const Polygon& P, const JohnCurve& curve, double rho, int n_samples);

enum class CurveMode { Straight, Constructed, OffsetGeodesic };

struct JohnSample {
  Vec2 x;
  CurveMode mode = CurveMode::Straight;
  std::vector<Vec2> curve;
  std::vector<std::string> piece_labels;
  double worst_margin = 0;
  double argmin_t = 0;
  bool pass = false;
};

struct JohnConfig {
  int n_points = 200;
  int carrot_samples = 2000;
  unsigned seed = 42;
  int stress = 1;  // multiplies both densities
};

struct JohnCert {
  double rho = 0;
  Vec2 center;
  bool pass = false;
  double worst_margin = 0;
  std::vector<JohnSample> samples;
};

// Center = inscribed disk center. Stratified interior samples (uniform in
// area, near boundary, near concave vertices), seeded. Each sample tries a
// straight segment, then the explicit construction, then an inward-offset
// geodesic; any curve whose worst margin clears -tol is a witness.
JohnCert certify_john(const Polygon& P, double rho, const JohnConfig& cfg = {});

// Largest rho at which certify_john would pass, computed from cached
// candidate curves per sample and reported on a 1e-3 grid.
double john_constant(const Polygon& P, const JohnConfig& cfg = {});

// Runs both downstream certifications at the quarter constant.
std::pair<SemiconvexCert, RotundCert> john_converse_check(const Polygon& P, double rho,
                                                          const CandidateConfig& search = {});

// Searches the closed ball B(x,r) for a point with boundary clearance at
// least rho*r/2; grid scan plus local refinement.
bool plump_check(const Polygon& P, const JohnCert& cert, Vec2 x, double r);

struct MergeResult {
  Polygon merged;
  JohnCert cert;
  double rho_merged = 0;
  bool area_clause = true;  // rho' * |glued triangle| <= |merged|, when applicable
};

// Splices two boundary rings along a shared segment and re-certifies the
// union. The shared segment must be long relative to the smaller diameter,
// except when one region is a triangle glued along its longest edge.
MergeResult merge_regions(const Polygon& d1, const JohnCert& c1, const Polygon& d2,
                          const JohnCert& c2, const Segment& shared,
                          double min_shared_ratio = 0.05, const JohnConfig& cfg = {});

}  // namespace johncut
