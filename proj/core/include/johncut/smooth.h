#pragma once

#include <optional>
#include <vector>

#include "johncut/john.h"
#include "johncut/polygon.h"
#include "johncut/rotund.h"

namespace johncut {

// Densely sampled domain boundary: outer ring CCW, holes CW. spacing is
// the maximum arc gap between consecutive samples (0 = derive from data).
struct DomainInput {
  std::vector<Vec2> outer;
  std::vector<std::vector<Vec2>> holes;
  double spacing = 0;

  double boundary_length() const;
  double sample_spacing() const;  // max adjacent gap over all rings
};

struct SaturateParams {
  int max_holes = 8;
  double epsilon_area = 0;  // removed-cell area budget; 0 = 1% of bbox area
};

// Pass-through for simply connected inputs. Otherwise one slit per hole
// connects it toward the outer boundary, grid cells covering boundary and
// slits are removed, and the remaining components come back as staircase
// rings. Removed cell area stays within the epsilon budget by halving the
// grid side.
struct SaturateResult {
  std::vector<DomainInput> pieces;
  std::vector<Segment> slits;
  double grid_side = 0;  // cell side; 0 on pass-through
  double removed_area = 0;
  std::vector<Polygon> removed_cells;
};

SaturateResult saturate_and_slit(const DomainInput& input, const SaturateParams& prm = {});

// Anchor points along the boundary with squares on each chord diagonal,
// the interior polygon left after removing the squares, and the outer
// bite pieces. Chord lengths stay within a factor two of each other,
// boundary tangents stay within pi/8 of their chord, and the interior
// polygon keeps angles above pi/4; d_target halves on violation, up to
// eight times.
struct BoundaryFrame {
  std::vector<Vec2> anchors;
  std::vector<Polygon> squares;
  Polygon interior;
  std::vector<Polygon> outer_pieces;
  double d = 0;  // smallest chord
};

BoundaryFrame boundary_frame(const DomainInput& input, double d_target);

struct DomainPipelineConfig {
  double d_target = 0;  // 0 = max(8 * spacing, 2% of boundary length)
  double rho = 0;       // common certification level; 0 = estimate on pieces
  JohnConfig john;      // sampling densities for piece certificates
  SaturateParams saturate;
};

struct DomainDecomposition {
  Partition partition;               // final pieces, cuts, exceptional cells
  std::vector<JohnCert> john_certs;  // parallel to pieces
  double rho = 0;                    // level every piece certified at
  double boundary_total = 0;         // H1 of input rings
  double pieces_total = 0;           // sum of piece boundary lengths
  bool ledger_ok = false;            // pieces_total <= (1+theta) * boundary_total
  bool all_certified = false;
  std::vector<Segment> slits;
  std::optional<BoundaryFrame> frame;  // frame of the first smooth piece
};

// Saturate and slit, build the boundary frame, decompose the interior
// polygon, then merge each outer bite into the neighbor sharing the
// longest boundary (kept standalone when re-certification fails).
DomainDecomposition decompose_domain(const DomainInput& input, double theta,
                                     double epsilon_rel = 0.01,
                                     const DomainPipelineConfig& cfg = {});

}  // namespace johncut
