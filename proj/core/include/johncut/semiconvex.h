#pragma once

#include <optional>
#include <vector>

#include "johncut/partition.h"

namespace johncut {

// Equivalence constant: a polygon whose admissible chords all pass at t
// certifies plainly at vartheta_bar_of(t).
inline double vartheta_bar_of(double t) { return 1.0 / (3.0 + 12.0 / t); }

// Parameter bundle for the splitting pipeline. vartheta is clamped to eta/2
// so every chord admissibility test stays inside the cigar regime; the
// clamp only ever shortens cuts, so the ledger bound is unaffected.
struct SemiconvexParams {
  double theta = 0.25;          // boundary-growth budget per split
  double eta = 0.05;            // cigar opening for chord admissibility
  double vartheta = 0.0;        // split trigger, min(theta/2, eta/2)
  double vartheta_bar = 0.0;    // vartheta_bar_of(vartheta)
  double vartheta_tilde = 0.0;  // vartheta_bar * eta / (4*eta + 2)
  double alpha = 0.0;           // 0.5 * asin(eta), triangle-angle floor
  double piece_vartheta = 0.0;  // vartheta_bar_of(vartheta_tilde), piece cert level

  static SemiconvexParams from_theta(double theta, double eta = 0.05);
};

// Chord admissibility. The strong form requires that no concave vertex of P
// other than the chord endpoints lies in the visible region of the chord,
// and that any triangle side has angle at chord.v above 0.5*asin(eta). The
// weak form restricts the visibility test to the selected side Q_{v,w}.
bool check_SP(const Polygon& P, const SplitResult& split, double eta);
bool check_WSP(const Polygon& P, const SplitResult& split, double eta);
bool check_SP(const Polygon& P, const Chord& chord, double eta);
bool check_WSP(const Polygon& P, const Chord& chord, double eta);

struct CandidateConfig {
  int boundary_samples = 256;   // evenly spaced w samples along the boundary
  bool restrict_to_sp = false;  // only admissible chords may fail the ratio
  double eta = 0.05;            // opening used when restrict_to_sp is set
};

struct SemiconvexCert {
  double vartheta = 0.0;
  bool pass = false;
  std::optional<Chord> counterexample;       // worst violating chord on fail
  double counterexample_min_diameter = 0.0;  // min-side intrinsic diameter
  long candidates_examined = 0;
};

// Certifies that every candidate chord [v;w], v concave, satisfies
// |[v;w]| >= vartheta * min_k d(Q_k). Convex polygons pass vacuously.
SemiconvexCert certify_semiconvex(const Polygon& P, double vartheta,
                                  const CandidateConfig& search = {});

// Finds a weakly admissible chord violating the vartheta ratio, minimizing
// the marked-vertex count of Q1 with ties broken toward smaller area. The
// returned Q1 side is verified admissibly semiconvex at vartheta_tilde.
// Empty result means no violation was found and P already certifies.
std::optional<SplitResult> find_splitting_chord(const Polygon& P,
                                                const SemiconvexParams& params);

struct SemiconvexDecomposition {
  Partition partition;
  std::vector<SemiconvexCert> certs;  // one per piece, at piece_vartheta
  SemiconvexParams params;
};

// Splits P until the remainder certifies. Every output piece passes the
// plain certificate at params.piece_vartheta and the boundary ledger obeys
// sum H1(bd P_j) <= (1 + 2*theta/(1-theta)) * H1(bd P).
SemiconvexDecomposition decompose_semiconvex(const Polygon& P,
                                             const SemiconvexParams& params);

// True iff for every concave vertex v of the selected side, the triangle
// (v, chord.v, chord.w) has max base angle at least alpha.
bool check_part_seg_criterion(const Polygon& P, const Chord& chord, double alpha,
                              QSide which = QSide::Q1);

}  // namespace johncut
