#pragma once

#include <optional>
#include <vector>

#include "johncut/partition.h"
#include "johncut/semiconvex.h"

namespace johncut {

struct Disk {
  Vec2 center;
  double radius = 0.0;
};

// Largest inscribed disk up to tolerance. Convex polygons use bisection on
// the radius with half-plane shrinking; nonconvex ones use grid seeding and
// a compass search on the signed boundary distance, refined to 1e-7
// relative. The returned disk is always verified contained.
Disk inscribed_disk(const Polygon& P);

struct RotundCert {
  double omega = 0.0;
  Disk disk;
  double d = 0.0;  // intrinsic diameter
  bool pass = false;
};

// Pass iff the inscribed radius reaches omega times the intrinsic diameter.
RotundCert certify_rotund(const Polygon& P, double omega);

// A disk inside a convex polygon with radius at least a quarter of the
// minimal directional extent (the true inscribed disk, which dominates).
Disk convex_ball_bound(const Polygon& P);

// End split of a semiconvex polygon: after aligning the minimal extent with
// the vertical axis, either the aspect ratio is already bounded (trivial
// split, p1 = P) or two vertical segments s1, s2 cut off the end regions
// containing all concave vertices, leaving a convex middle piece.
struct EndSplit {
  bool trivial = false;
  std::optional<Polygon> p1, p2;
  Polygon pmid;  // convex middle, empty on the trivial branch
  std::optional<Segment> s1, s2;
  double c_empirical = 0.0;  // worst aspect / distance constant achieved
};

// Requires a passing semiconvexity certificate at level >= vartheta.
// The pieces are returned in the input frame. On the non-trivial branch
// the cut lengths obey H1(S_i) <= vartheta * H1(bd P) and the end pieces
// have bounded aspect ratio and bounded extent relative to their distance
// from the cut (the achieved constant is recorded).
EndSplit split_ends(const Polygon& P, double vartheta, const SemiconvexCert& cert);

struct SlabResult {
  Partition partition;
  std::vector<RotundCert> certs;  // one per piece, at omega_min
  double omega_min = 0.0;         // worst inscribed-radius/diameter ratio
};

// Partitions a convex polygon with interior angles >= pi/4 into vertical
// slabs whose width matches theta^{-1} times the cross-section at their
// right boundary; steep end caps are merged into the first and last slab
// and a too-thin final slab is merged into its predecessor. Total cut
// length stays below theta * H1(bd P).
SlabResult slab_partition_convex(const Polygon& P, double theta);

struct RotundPipelineParams {
  double theta = 0.25;
  double vartheta = 0.0;        // semiconvexity level of the input certificate
  double epsilon = 0.01;        // exceptional boundary budget for sharp trims
  double vartheta_check = 0.0;  // piece certificate level; 0 = derived default
  double omega_check = 0.0;     // piece rotundness level; 0 = record achieved
  double alpha = 0.1;           // base-angle floor for end-piece attachment
};

struct RotundDecomposition {
  Partition partition;
  std::vector<SemiconvexCert> semiconvex_certs;  // one per piece
  std::vector<RotundCert> rotund_certs;          // one per piece
  double omega_min = 0.0;
  double vartheta_used = 0.0;
  bool part_seg_ok = true;  // end cuts satisfied the base-angle criterion
  bool trivial = false;     // input kept whole by the aspect early exit
};

// Full semiconvex-to-rotund stage: convex inputs are trimmed at sharp
// vertices (exceptional isosceles triangles within the epsilon budget) and
// slab-partitioned; nonconvex inputs go through split_ends first, with the
// convex middle handled the same way and the end pieces kept whole. Every
// non-exceptional piece carries both certificates.
RotundDecomposition decompose_rotund(const Polygon& P, const SemiconvexCert& cert,
                                     const RotundPipelineParams& params);

// Full decomposition: concave chord splitting down to the derived
// certification level, then end trimming and slab partitioning of every
// piece. Internal stages run at theta/4 so the total added cut length
// stays inside the theta budget checked by ledger_check.
struct PipelineResult {
  Partition partition;
  std::vector<SemiconvexCert> semiconvex_certs;  // parallel to pieces
  std::vector<RotundCert> rotund_certs;          // parallel to pieces
  SemiconvexParams params;
  double omega_min = 0.0;
  double vartheta_used = 0.0;
  bool part_seg_ok = true;
};

PipelineResult decompose_polygon(const Polygon& P, double theta, double eta = 0.05,
                                 double epsilon_rel = 0.01);

}  // namespace johncut
