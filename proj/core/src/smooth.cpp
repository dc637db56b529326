#include "johncut/smooth.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>

#include "grid_cells.h"
#include "johncut/errors.h"
#include "johncut/extents.h"
#include "johncut/predicates.h"

namespace johncut {

namespace {

double closed_length(const std::vector<Vec2>& r) {
  double L = 0.0;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) L += dist(r[i], r[(i + 1) % n]);
  return L;
}

double max_gap(const std::vector<Vec2>& r) {
  double m = 0.0;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, dist(r[i], r[(i + 1) % n]));
  return m;
}

// Arclength parametrization of a closed dense ring.
class RingWalk {
 public:
  explicit RingWalk(std::vector<Vec2> pts) : pts_(std::move(pts)) {
    cum_.resize(pts_.size() + 1);
    cum_[0] = 0.0;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      cum_[i + 1] = cum_[i] + dist(pts_[i], pts_[(i + 1) % pts_.size()]);
  }
  double length() const { return cum_.back(); }
  std::size_t samples() const { return pts_.size(); }
  Vec2 sample(std::size_t j) const { return pts_[j % pts_.size()]; }
  double position(std::size_t j) const { return cum_[j]; }

  Vec2 at(double s) const {
    const double L = length();
    s = std::fmod(s, L);
    if (s < 0.0) s += L;
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(cum_.begin(), cum_.end(), s) - cum_.begin());
    i = (i == 0 ? 0 : i - 1);
    if (i >= pts_.size()) i = pts_.size() - 1;
    const double seg = cum_[i + 1] - cum_[i];
    const double t = seg > 0.0 ? (s - cum_[i]) / seg : 0.0;
    return pts_[i] + t * (pts_[(i + 1) % pts_.size()] - pts_[i]);
  }

  // Centered-difference tangent at sample j.
  Vec2 tangent(std::size_t j) const {
    const std::size_t n = pts_.size();
    return normalized(pts_[(j + 1) % n] - pts_[(j + n - 1) % n]);
  }

  // First sample index with position > s (not wrapped).
  std::size_t first_after(double s) const {
    return static_cast<std::size_t>(std::upper_bound(cum_.begin(), cum_.end() - 1, s) -
                                    cum_.begin());
  }

 private:
  std::vector<Vec2> pts_;
  std::vector<double> cum_;
};

// Liang-Barsky overlap test between segment [a;b] and the closed rectangle.
bool seg_intersects_rect(Vec2 a, Vec2 b, double x0, double y0, double x1, double y1) {
  double t0 = 0.0, t1 = 1.0;
  const double dx = b.x - a.x, dy = b.y - a.y;
  auto clip = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  return clip(-dx, a.x - x0) && clip(dx, x1 - a.x) && clip(-dy, a.y - y0) &&
         clip(dy, y1 - a.y);
}

struct Grid {
  Vec2 origin;
  double side = 0.0;
  int nx = 0, ny = 0;
  detail::CellMask removed;

  Vec2 center(int i, int j) const {
    return Vec2{origin.x + (i + 0.5) * side, origin.y + (j + 0.5) * side};
  }
  void mark_segment(Vec2 a, Vec2 b, double pad) {
    const int i0 = std::clamp(
        static_cast<int>(std::floor((std::min(a.x, b.x) - pad - origin.x) / side)), 0, nx - 1);
    const int i1 = std::clamp(
        static_cast<int>(std::floor((std::max(a.x, b.x) + pad - origin.x) / side)), 0, nx - 1);
    const int j0 = std::clamp(
        static_cast<int>(std::floor((std::min(a.y, b.y) - pad - origin.y) / side)), 0, ny - 1);
    const int j1 = std::clamp(
        static_cast<int>(std::floor((std::max(a.y, b.y) + pad - origin.y) / side)), 0, ny - 1);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        if (removed[i][j]) continue;
        const double x0 = origin.x + i * side - pad, x1 = origin.x + (i + 1) * side + pad;
        const double y0 = origin.y + j * side - pad, y1 = origin.y + (j + 1) * side + pad;
        if (seg_intersects_rect(a, b, x0, y0, x1, y1)) removed[i][j] = true;
      }
    }
  }
};

// Parity of boundary crossings above each cell center, one vertical sweep
// per column. A point is in the domain iff the count of ring crossings
// above it is odd (holes flip parity back).
void inside_by_parity(const Grid& g, const std::vector<Segment>& edges,
                      detail::CellMask& inside) {
  inside.assign(g.nx, std::vector<bool>(g.ny, false));
  std::vector<double> ys;
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.origin.x + (i + 0.5) * g.side;
    ys.clear();
    for (const Segment& e : edges) {
      const bool la = e.a.x <= x, lb = e.b.x <= x;
      if (la == lb) continue;
      const double t = (x - e.a.x) / (e.b.x - e.a.x);
      ys.push_back(e.a.y + t * (e.b.y - e.a.y));
    }
    std::sort(ys.begin(), ys.end());
    for (int j = 0; j < g.ny; ++j) {
      const double cy = g.origin.y + (j + 0.5) * g.side;
      const std::size_t above = ys.end() - std::upper_bound(ys.begin(), ys.end(), cy);
      inside[i][j] = (above % 2) == 1;
    }
  }
}

void append_ring_edges(const std::vector<Vec2>& r, std::vector<Segment>& out) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back({r[i], r[(i + 1) % n]});
}

// Square corners in cyclic order with the chord [p;q] as diagonal.
std::array<Vec2, 4> square_on_chord(Vec2 p, Vec2 q) {
  const Vec2 m = 0.5 * (p + q);
  const Vec2 h = 0.5 * perp_ccw(q - p);
  return {p, m - h, q, m + h};
}

double project_gap(const std::array<Vec2, 4>& A, const std::array<Vec2, 4>& B, Vec2 axis) {
  double loA = std::numeric_limits<double>::max(), hiA = std::numeric_limits<double>::lowest();
  double loB = loA, hiB = hiA;
  for (Vec2 v : A) {
    loA = std::min(loA, dot(v, axis));
    hiA = std::max(hiA, dot(v, axis));
  }
  for (Vec2 v : B) {
    loB = std::min(loB, dot(v, axis));
    hiB = std::max(hiB, dot(v, axis));
  }
  return std::max(loA - hiB, loB - hiA);
}

// Separation measure between two squares: >= 0 iff they touch at most in
// a point (SAT over edge normals).
double square_separation(const std::array<Vec2, 4>& A, const std::array<Vec2, 4>& B) {
  double sep = std::numeric_limits<double>::lowest();
  for (int k = 0; k < 4; ++k) {
    sep = std::max(sep, project_gap(A, B, normalized(perp_ccw(A[(k + 1) % 4] - A[k]))));
    sep = std::max(sep, project_gap(A, B, normalized(perp_ccw(B[(k + 1) % 4] - B[k]))));
  }
  return sep;
}

double square_distance(const std::array<Vec2, 4>& A, const std::array<Vec2, 4>& B) {
  double d = std::numeric_limits<double>::max();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      d = std::min(d, point_segment_dist(A[i], B[j], B[(j + 1) % 4]));
      d = std::min(d, point_segment_dist(B[i], A[j], A[(j + 1) % 4]));
    }
  }
  return d;
}

bool point_in_square(Vec2 p, const std::array<Vec2, 4>& Q, double tol) {
  for (int k = 0; k < 4; ++k) {
    const Vec2 a = Q[k], b = Q[(k + 1) % 4];
    if (cross(b - a, p - a) < -tol * norm(b - a)) return false;
  }
  return true;
}

double angle_between(Vec2 u, Vec2 v) {
  const double c = std::clamp(dot(normalized(u), normalized(v)), -1.0, 1.0);
  return std::acos(c);
}

// ---- shared-boundary splicing ----------------------------------------

struct OverlapRun {
  std::size_t edge = 0;  // edge index on A
  double t0 = 0.0, t1 = 0.0;
  Vec2 p0, q1;
};

// Collinear overlap runs of B's edges on A's boundary, ordered along A.
std::vector<OverlapRun> overlap_runs(const Polygon& A, const Polygon& B, double tol) {
  std::vector<OverlapRun> runs;
  const int na = A.size(), nb = B.size();
  for (int i = 0; i < na; ++i) {
    const Vec2 a0 = A.vertex(i), a1 = A.vertex(i + 1);
    const double len = dist(a0, a1);
    if (len <= tol) continue;
    const Vec2 dir = (a1 - a0) / len;
    BBox ab;
    ab.expand(a0);
    ab.expand(a1);
    for (int j = 0; j < nb; ++j) {
      const Vec2 b0 = B.vertex(j), b1 = B.vertex(j + 1);
      BBox bb;
      bb.expand(b0);
      bb.expand(b1);
      if (!ab.overlaps(bb, tol)) continue;
      if (classify_segments(a0, a1, b0, b1) != SegX::Overlap) continue;
      double s0 = dot(b0 - a0, dir), s1 = dot(b1 - a0, dir);
      if (s0 > s1) std::swap(s0, s1);
      const double t0 = std::max(0.0, s0), t1 = std::min(len, s1);
      if (t1 - t0 <= tol) continue;
      runs.push_back({static_cast<std::size_t>(i), t0, t1, a0 + t0 * dir, a0 + t1 * dir});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const OverlapRun& x, const OverlapRun& y) {
    return x.edge != y.edge ? x.edge < y.edge : x.t0 < y.t0;
  });
  return runs;
}

double shared_boundary_length(const Polygon& A, const Polygon& B, double tol) {
  double s = 0.0;
  for (const OverlapRun& r : overlap_runs(A, B, tol)) s += r.t1 - r.t0;
  return s;
}

// Longest contiguous chain of overlap runs along A; endpoints in A order.
std::optional<std::pair<Vec2, Vec2>> longest_shared_chain(const Polygon& A, const Polygon& B,
                                                          double tol) {
  std::vector<OverlapRun> runs = overlap_runs(A, B, tol);
  if (runs.empty()) return std::nullopt;
  struct Chain {
    Vec2 p0, p1;
    double len = 0.0;
    bool start_at_origin = false;
  };
  std::vector<Chain> chains;
  for (const OverlapRun& r : runs) {
    if (!chains.empty() && dist(chains.back().p1, r.p0) <= 8.0 * tol) {
      chains.back().p1 = r.q1;
      chains.back().len += r.t1 - r.t0;
    } else {
      chains.push_back({r.p0, r.q1, r.t1 - r.t0, false});
    }
  }
  // The last chain may continue into the first across the ring origin.
  if (chains.size() > 1 && dist(chains.back().p1, chains.front().p0) <= 8.0 * tol) {
    chains.front().p0 = chains.back().p0;
    chains.front().len += chains.back().len;
    chains.pop_back();
  }
  const Chain& best =
      *std::max_element(chains.begin(), chains.end(),
                        [](const Chain& x, const Chain& y) { return x.len < y.len; });
  if (best.len <= 8.0 * tol) return std::nullopt;
  return std::make_pair(best.p0, best.p1);
}

std::vector<Vec2> ring_with_point(std::vector<Vec2> ring, Vec2 p, double tol) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i)
    if (dist(ring[i], p) <= tol) return ring;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ring[i], b = ring[(i + 1) % n];
    if (point_segment_dist(p, a, b) <= tol) {
      ring.insert(ring.begin() + static_cast<std::ptrdiff_t>(i) + 1, p);
      return ring;
    }
  }
  return ring;  // not on the boundary; caller detects via index lookup
}

int index_of(const std::vector<Vec2>& ring, Vec2 p, double tol) {
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (dist(ring[i], p) <= tol) return static_cast<int>(i);
  return -1;
}

// Union of two polygons sharing the boundary path between q0 and q1 (in
// A's orientation). Returns nothing when the splice degenerates.
std::optional<Polygon> splice_union(const Polygon& A, const Polygon& B, Vec2 q0, Vec2 q1,
                                    double tol) {
  std::vector<Vec2> ra = ring_with_point(ring_with_point(A.verts(), q0, tol), q1, tol);
  std::vector<Vec2> rb = ring_with_point(ring_with_point(B.verts(), q0, tol), q1, tol);
  const int a0 = index_of(ra, q0, tol), a1 = index_of(ra, q1, tol);
  const int b0 = index_of(rb, q0, tol), b1 = index_of(rb, q1, tol);
  if (a0 < 0 || a1 < 0 || b0 < 0 || b1 < 0) return std::nullopt;
  std::vector<Vec2> merged;
  // Keep A from q1 forward to q0 (the shared path runs q0 -> q1 in A).
  for (int i = a1;; i = (i + 1) % static_cast<int>(ra.size())) {
    merged.push_back(ra[static_cast<std::size_t>(i)]);
    if (i == a0) break;
  }
  // Keep B from q0 forward to q1, interior nodes only.
  for (int i = (b0 + 1) % static_cast<int>(rb.size()); i != b1;
       i = (i + 1) % static_cast<int>(rb.size()))
    merged.push_back(rb[static_cast<std::size_t>(i)]);
  if (merged.size() < 3) return std::nullopt;
  try {
    Polygon M = Polygon::from_ring(merged);
    if (std::abs(M.area() - A.area() - B.area()) > 1e-6 * (A.area() + B.area()))
      return std::nullopt;
    return M;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Polygon> merge_attempt(const Polygon& A, const Polygon& B, double tol) {
  auto chain = longest_shared_chain(A, B, tol);
  if (!chain) return std::nullopt;
  return splice_union(A, B, chain->first, chain->second, tol);
}

}  // namespace

double DomainInput::boundary_length() const {
  double L = closed_length(outer);
  for (const auto& h : holes) L += closed_length(h);
  return L;
}

double DomainInput::sample_spacing() const {
  double m = max_gap(outer);
  for (const auto& h : holes) m = std::max(m, max_gap(h));
  return m;
}

SaturateResult saturate_and_slit(const DomainInput& input, const SaturateParams& prm) {
  if (input.outer.size() < 3) throw Error(Err::BadInput, "outer ring needs at least 3 samples");
  SaturateResult out;
  if (input.holes.empty()) {
    out.pieces.push_back(input);
    return out;
  }
  if (static_cast<int>(input.holes.size()) > prm.max_holes)
    throw Error(Err::TooManyHoles, "hole count exceeds the configured bound");

  const Polygon outerP = Polygon::from_ring(input.outer);
  std::vector<Polygon> holeP;
  holeP.reserve(input.holes.size());
  for (const auto& h : input.holes) holeP.push_back(Polygon::from_ring(h));
  for (std::size_t i = 0; i < holeP.size(); ++i) {
    if (!outerP.strictly_contains(holeP[i].vertex(0)))
      throw Error(Err::BadInput, "hole not strictly inside the outer ring");
    for (std::size_t j = 0; j < holeP.size(); ++j)
      if (j != i && holeP[j].contains(holeP[i].vertex(0)))
        throw Error(Err::BadInput, "holes overlap");
  }

  const BBox bb = outerP.bbox();
  const double diag = bb.diagonal();
  const double eps = outerP.eps();
  const double diam = euclidean_diameter(outerP.verts());

  // One slit per hole, nearest holes first so early slits stay short.
  std::vector<std::size_t> order(holeP.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> gap(holeP.size());
  for (std::size_t i = 0; i < holeP.size(); ++i) {
    gap[i] = std::numeric_limits<double>::max();
    for (int k = 0; k < holeP[i].size(); ++k)
      gap[i] = std::min(gap[i], outerP.boundary_distance(holeP[i].vertex(k)));
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return gap[a] != gap[b] ? gap[a] < gap[b] : a < b; });

  for (std::size_t hi : order) {
    const Polygon& H = holeP[hi];
    struct Cand {
      Vec2 v, q;
      double len;
    };
    std::vector<Cand> cands;
    for (int k = 0; k < H.size(); ++k) {
      const Vec2 v = H.vertex(k);
      double best = std::numeric_limits<double>::max();
      Vec2 q = outerP.vertex(0);
      for (int e = 0; e < outerP.size(); ++e) {
        const Vec2 c = closest_point_on_segment(v, outerP.vertex(e), outerP.vertex(e + 1));
        if (const double d = dist(v, c); d < best) {
          best = d;
          q = c;
        }
      }
      cands.push_back({v, q, best});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.len != b.len ? a.len < b.len : lex_less(a.v, b.v);
    });
    bool placed = false;
    for (const Cand& c : cands) {
      if (c.len > diam) break;
      if (c.len <= 20.0 * eps) continue;
      // Transversality is tested on the segment nudged off both endpoints.
      const Vec2 dir = normalized(c.q - c.v);
      const Vec2 a = c.v + (10.0 * eps) * dir;
      const Vec2 b = c.q - (10.0 * eps) * dir;
      if (!outerP.contains_segment(a, b)) continue;
      bool clear = true;
      for (std::size_t j = 0; j < holeP.size() && clear; ++j) {
        const Polygon& O = holeP[j];
        const bool own = j == hi;
        for (int e = 0; e < O.size() && clear; ++e)
          if (classify_segments(a, b, O.vertex(e), O.vertex(e + 1)) != SegX::None) clear = false;
        if (own && clear && O.strictly_contains(0.5 * (a + b))) clear = false;
      }
      for (const Segment& s : out.slits)
        if (clear && classify_segments(a, b, s.a, s.b) != SegX::None) clear = false;
      if (!clear) continue;
      out.slits.push_back({c.v, c.q});
      placed = true;
      break;
    }
    if (!placed)
      throw Error(Err::SlitPlacementFailed, "no admissible slit for a hole");
  }

  // Remove grid cells covering the rings and slits; the kept cells tile
  // the pieces exactly, so the removed area inside the domain is the
  // domain area minus the kept area.
  double area_domain = outerP.area();
  for (const Polygon& H : holeP) area_domain -= H.area();
  const double budget = prm.epsilon_area > 0.0
                            ? prm.epsilon_area
                            : 0.01 * (bb.hi.x - bb.lo.x) * (bb.hi.y - bb.lo.y);

  std::vector<Segment> edges;
  append_ring_edges(outerP.verts(), edges);
  for (const Polygon& H : holeP) append_ring_edges(H.verts(), edges);

  double side = diag / 32.0;
  Grid g;
  detail::CellMask kept;
  double kept_area = 0.0;
  for (int round = 0;; ++round, side *= 0.5) {
    if (round > 10) throw Error(Err::ConstructionFailed, "grid refinement exhausted");
    g.origin = bb.lo - Vec2{side, side};
    g.side = side;
    g.nx = static_cast<int>(std::ceil((bb.hi.x - bb.lo.x + 2.0 * side) / side)) + 1;
    g.ny = static_cast<int>(std::ceil((bb.hi.y - bb.lo.y + 2.0 * side) / side)) + 1;
    if (static_cast<long long>(g.nx) * g.ny > 16'000'000)
      throw Error(Err::ConstructionFailed, "grid too fine for the area budget");
    g.removed.assign(g.nx, std::vector<bool>(g.ny, false));
    const double pad = 4.0 * eps;
    for (const Segment& e : edges) g.mark_segment(e.a, e.b, pad);
    for (const Segment& s : out.slits) g.mark_segment(s.a, s.b, pad);

    inside_by_parity(g, edges, kept);
    long long n_kept = 0;
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) {
        kept[i][j] = kept[i][j] && !g.removed[i][j];
        if (kept[i][j]) ++n_kept;
      }
    kept_area = static_cast<double>(n_kept) * side * side;
    if (area_domain - kept_area <= budget + 1e-12 * area_domain) break;
  }

  detail::remove_pinches(kept);
  long long n_kept = 0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (kept[i][j]) ++n_kept;
  kept_area = static_cast<double>(n_kept) * side * side;

  std::vector<std::vector<int>> label;
  const int ncomp = detail::label_components(kept, label);
  for (int c = 0; c < ncomp; ++c) {
    auto rings = detail::trace_component(label, c, g.origin, side);
    if (rings.size() != 1)
      throw Error(Err::SlitPlacementFailed, "saturated piece is not simply connected");
    out.pieces.push_back(DomainInput{std::move(rings.front()), {}, side});
  }
  if (out.pieces.empty()) throw Error(Err::ConstructionFailed, "no interior cells survived");

  out.grid_side = side;
  out.removed_area = area_domain - kept_area;
  // Removed cells near the domain, for rendering only.
  for (int i = 0; i < g.nx && static_cast<int>(out.removed_cells.size()) < 20000; ++i)
    for (int j = 0; j < g.ny && static_cast<int>(out.removed_cells.size()) < 20000; ++j) {
      if (!g.removed[i][j]) continue;
      const Vec2 c = g.center(i, j);
      const Vec2 o{g.origin.x + i * side, g.origin.y + j * side};
      if (!outerP.bbox().contains(c, side)) continue;
      out.removed_cells.push_back(Polygon::from_ring(
          {o, o + Vec2{side, 0.0}, o + Vec2{side, side}, o + Vec2{0.0, side}}));
    }
  return out;
}

BoundaryFrame boundary_frame(const DomainInput& input, double d_target) {
  if (!input.holes.empty())
    throw Error(Err::BadInput, "frame construction needs a simply connected input");
  if (input.outer.size() < 8) throw Error(Err::BadInput, "boundary sampling too sparse");
  if (!(d_target > 0.0)) throw Error(Err::BadInput, "chord target must be positive");

  const Polygon outerP = Polygon::from_ring(input.outer);
  RingWalk walk(outerP.verts());
  const double L = walk.length();
  const double spacing = max_gap(outerP.verts());
  const double tol = 1e-9 * L;
  const double pi = std::numbers::pi;

  if (d_target < 8.0 * spacing - tol)
    throw Error(Err::FrameConstructionFailed, "sampling too sparse for the chord scale");
  double d_try = d_target;
  for (int round = 0; round < 8; ++round, d_try *= 0.5) {
    // Retries may shrink below the validated input scale, but tangent
    // estimates need a few samples per chord.
    if (d_try < 4.0 * spacing - tol)
      throw Error(Err::FrameConstructionFailed, "boundary too rough for the chord floor");
    const int n = std::max<int>(4, static_cast<int>(std::llround(L / d_try)));
    std::vector<double> at(n);
    std::vector<Vec2> anchors(n);
    for (int k = 0; k < n; ++k) {
      at[k] = L * k / n;
      anchors[k] = walk.at(at[k]);
    }
    std::vector<std::array<Vec2, 4>> sq(n);
    std::vector<double> clen(n);
    double dmin = std::numeric_limits<double>::max(), dmax = 0.0;
    for (int k = 0; k < n; ++k) {
      const Vec2 p = anchors[k], q = anchors[(k + 1) % n];
      clen[k] = dist(p, q);
      dmin = std::min(dmin, clen[k]);
      dmax = std::max(dmax, clen[k]);
      sq[k] = square_on_chord(p, q);
    }
    bool ok = dmin >= 0.5 * dmax - tol && dmin > tol;

    // Tangent-vs-chord angle below pi/8 throughout each square, and the
    // boundary arc contained in its square.
    for (int k = 0; k < n && ok; ++k) {
      const Vec2 chord = anchors[(k + 1) % n] - anchors[k];
      const double s0 = at[k], s1 = k + 1 < n ? at[k + 1] : L;
      std::size_t j = walk.first_after(s0);
      if (j > 0) --j;  // include the sample carrying the anchor
      for (; j <= walk.samples() && walk.position(j) < s1 + tol && ok; ++j) {
        const std::size_t jj = j % walk.samples();
        if (angle_between(walk.tangent(jj), chord) >= pi / 8.0 - 1e-9) ok = false;
        const double pos = walk.position(j);
        if (pos > s0 + tol && pos < s1 - tol && !point_in_square(walk.sample(jj), sq[k], tol))
          ok = false;
      }
    }

    // Adjacent squares meet only at the shared anchor; distant squares
    // keep separation d/2.
    for (int k = 0; k < n && ok; ++k) {
      if (square_separation(sq[k], sq[(k + 1) % n]) < -tol) ok = false;
      for (int m = k + 2; m < n && ok; ++m) {
        if (k == 0 && m == n - 1) continue;  // cyclically adjacent
        if (square_distance(sq[k], sq[m]) < 0.5 * dmin - tol) ok = false;
      }
    }

    if (!ok) continue;

    // Interior polygon: anchors alternating with inner square corners.
    std::vector<Vec2> ring_int;
    ring_int.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      ring_int.push_back(anchors[k]);
      ring_int.push_back(sq[k][3]);  // corner on the interior side of the chord
    }
    BoundaryFrame out;
    try {
      out.interior = Polygon::validate(ring_int);
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < out.interior.size() && ok; ++k)
      if (out.interior.interior_angle(k) < pi / 4.0 - 1e-9) ok = false;
    if (!ok) continue;

    // Outer bites: the boundary arc plus the inner corner.
    std::vector<Polygon> bites;
    bites.reserve(n);
    bool bite_ok = true;
    for (int k = 0; k < n && bite_ok; ++k) {
      std::vector<Vec2> ring;
      ring.push_back(anchors[k]);
      const double s0 = at[k], s1 = k + 1 < n ? at[k + 1] : L;
      for (std::size_t j = walk.first_after(s0);
           j <= walk.samples() && walk.position(j) < s1 - tol; ++j) {
        const Vec2 s = walk.sample(j % walk.samples());
        if (dist(s, ring.back()) > tol) ring.push_back(s);
      }
      const Vec2 pnext = anchors[(k + 1) % n];
      if (dist(pnext, ring.back()) > tol) ring.push_back(pnext);
      ring.push_back(sq[k][3]);
      try {
        bites.push_back(Polygon::validate(ring));
      } catch (const Error&) {
        bite_ok = false;
      }
    }
    if (!bite_ok) continue;

    out.anchors = std::move(anchors);
    for (int k = 0; k < n; ++k)
      out.squares.push_back(Polygon::validate({sq[k][0], sq[k][1], sq[k][2], sq[k][3]}));
    out.outer_pieces = std::move(bites);
    out.d = dmin;
    return out;
  }
  throw Error(Err::FrameConstructionFailed, "no chord scale satisfied the frame constraints");
}

DomainDecomposition decompose_domain(const DomainInput& input, double theta,
                                     double epsilon_rel, const DomainPipelineConfig& cfg) {
  if (!(theta > 0.0 && theta <= 1.0)) throw Error(Err::BadInput, "theta must lie in (0,1]");
  if (!(epsilon_rel > 0.0)) throw Error(Err::BadInput, "epsilon must be positive");

  DomainDecomposition out;
  out.boundary_total = input.boundary_length();

  const SaturateResult sat = saturate_and_slit(input, cfg.saturate);
  out.slits = sat.slits;
  for (const Polygon& c : sat.removed_cells) out.partition.exceptional.push_back(c);

  // Pieces plus, for merged ones, the parts to fall back to when the
  // merged certificate fails.
  std::vector<Polygon> pieces;
  std::vector<std::vector<Polygon>> parts;

  for (const DomainInput& piece : sat.pieces) {
    if (sat.grid_side > 0.0) {
      const Polygon P = Polygon::validate(piece.outer);
      PipelineResult pr = decompose_polygon(P, theta, 0.05, epsilon_rel);
      for (Polygon& q : pr.partition.pieces) {
        pieces.push_back(std::move(q));
        parts.push_back({});
      }
      for (Polygon& q : pr.partition.exceptional)
        out.partition.exceptional.push_back(std::move(q));
      for (const Chord& c : pr.partition.cuts) out.partition.cuts.push_back(c);
      continue;
    }

    const double Lp = closed_length(piece.outer);
    const double dt = cfg.d_target > 0.0
                          ? cfg.d_target
                          : std::max(8.0 * piece.sample_spacing(), 0.02 * Lp);
    BoundaryFrame fr = boundary_frame(piece, dt);
    PipelineResult pr = decompose_polygon(fr.interior, theta, 0.05, epsilon_rel);
    const double tol = 1e-7 * fr.interior.bbox().diagonal();

    const std::size_t base = pieces.size();
    for (Polygon& q : pr.partition.pieces) {
      pieces.push_back(std::move(q));
      parts.push_back({});
    }
    for (Polygon& q : pr.partition.exceptional)
      out.partition.exceptional.push_back(std::move(q));
    for (const Chord& c : pr.partition.cuts) out.partition.cuts.push_back(c);

    for (const Polygon& bite : fr.outer_pieces) {
      std::size_t best = base;
      double best_len = 0.0;
      for (std::size_t i = base; i < pieces.size(); ++i) {
        const double s = shared_boundary_length(pieces[i], bite, tol);
        if (s > best_len) {
          best_len = s;
          best = i;
        }
      }
      std::optional<Polygon> merged;
      if (best_len > tol) merged = merge_attempt(pieces[best], bite, tol);
      if (merged) {
        if (parts[best].empty()) parts[best].push_back(pieces[best]);
        parts[best].push_back(bite);
        pieces[best] = std::move(*merged);
      } else {
        pieces.push_back(bite);
        parts.push_back({});
      }
    }
    if (!out.frame) out.frame = std::move(fr);
  }

  // One common certification level across every piece.
  double rho = cfg.rho;
  if (!(rho > 0.0)) {
    rho = 1.0;
    for (const Polygon& p : pieces) rho = std::min(rho, john_constant(p, cfg.john));
    rho = std::max(rho, 1e-3);
  }

  std::vector<Polygon> final_pieces;
  std::vector<JohnCert> certs;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    JohnCert c = certify_john(pieces[i], rho, cfg.john);
    if (!c.pass && !parts[i].empty()) {
      // Merged certificate failed: keep the constituents standalone.
      for (const Polygon& q : parts[i]) {
        final_pieces.push_back(q);
        certs.push_back(certify_john(q, rho, cfg.john));
      }
      continue;
    }
    final_pieces.push_back(pieces[i]);
    certs.push_back(std::move(c));
  }

  out.partition.pieces = std::move(final_pieces);
  out.john_certs = std::move(certs);
  out.rho = rho;
  out.pieces_total = out.partition.pieces_boundary_sum();
  out.ledger_ok = out.pieces_total <= (1.0 + theta) * out.boundary_total +
                                          1e-9 * out.boundary_total;
  out.all_certified = !out.john_certs.empty();
  for (const JohnCert& c : out.john_certs) out.all_certified = out.all_certified && c.pass;
  return out;
}

}  // namespace johncut
