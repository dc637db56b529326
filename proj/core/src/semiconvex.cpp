#include "johncut/semiconvex.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "johncut/extents.h"
#include "johncut/geodesic.h"
#include "johncut/tubes.h"

namespace johncut {

SemiconvexParams SemiconvexParams::from_theta(double theta, double eta) {
  if (!(theta > 0.0) || !(theta < 1.0))
    throw Error(Err::BadInput, "theta must lie in (0,1)");
  if (!(eta > 0.0) || !(eta < 1.0))
    throw Error(Err::InvalidEta, "eta must lie in (0,1)");
  SemiconvexParams p;
  p.theta = theta;
  p.eta = eta;
  p.vartheta = std::min(0.5 * theta, 0.5 * eta);
  p.vartheta_bar = vartheta_bar_of(p.vartheta);
  p.vartheta_tilde = p.vartheta_bar * eta / (4.0 * eta + 2.0);
  p.alpha = 0.5 * std::asin(eta);
  p.piece_vartheta = vartheta_bar_of(p.vartheta_tilde);
  return p;
}

namespace {

// Shared admissibility core. When restrict_side is set, the visibility test
// only inspects concave vertices lying in the selected side.
bool admissibility_impl(const Polygon& P, const SplitResult& s, double eta,
                        std::optional<QSide> restrict_side) {
  const Vec2 v = s.chord.v;
  const Vec2 w = s.chord.w;
  const Segment vw{v, w};
  const double eps = P.eps();
  for (int ci : P.concave_indices()) {
    const Vec2 u = P[ci];
    if (dist(u, v) <= eps || dist(u, w) <= eps) continue;
    if (restrict_side && *restrict_side != QSide::Both) {
      const Polygon& sel = (*restrict_side == QSide::Q1) ? s.q1 : s.q2;
      if (!sel.contains(u)) continue;
    }
    if (visible_region_membership(P, vw, eta, u)) return false;
  }
  const double floor_angle = 0.5 * std::asin(eta);
  for (const Polygon* q : {&s.q1, &s.q2}) {
    if (q->size() != 3) continue;
    int iv = q->vertex_near(v);
    if (iv < 0) continue;
    if (q->interior_angle(iv) <= floor_angle) return false;
  }
  return true;
}

}  // namespace

bool check_SP(const Polygon& P, const SplitResult& split, double eta) {
  return admissibility_impl(P, split, eta, std::nullopt);
}

bool check_WSP(const Polygon& P, const SplitResult& split, double eta) {
  return admissibility_impl(P, split, eta, select_Qvw(split));
}

bool check_SP(const Polygon& P, const Chord& chord, double eta) {
  return check_SP(P, split_by_chord(P, chord.v, chord.w), eta);
}

bool check_WSP(const Polygon& P, const Chord& chord, double eta) {
  return check_WSP(P, split_by_chord(P, chord.v, chord.w), eta);
}

namespace {

enum class ChordFilter { None, SP, WSP };

struct Violation {
  SplitResult split;
  double dmin = 0.0;    // min-side intrinsic diameter
  double margin = 0.0;  // vartheta * dmin - |chord|, positive on violation
};

double side_diameter(const Polygon& q) {
  if (q.is_convex()) return euclidean_diameter(q.verts());
  return intrinsic_diameter(q).d;
}

// Candidate far endpoints for chords rooted at vertex vi: every visible
// vertex, the first boundary hit of the extended ray through it, the
// perpendicular feet on visible edges, and evenly spaced boundary samples.
// The ratio |[v;w]| / min_k d(Q_k) is piecewise smooth between these points,
// and the sample count is the documented soundness knob.
std::vector<Vec2> chord_candidates(const Polygon& P, int vi, int n_samples) {
  const Vec2 v = P[vi];
  const double eps = P.eps();
  const int n = P.size();
  std::vector<Vec2> out;
  out.reserve(2 * n + n_samples);

  auto admit = [&](Vec2 w) {
    if (dist(w, v) <= eps) return;
    if (!P.contains_segment(v, w)) return;
    out.push_back(w);
  };

  for (int j = 0; j < n; ++j) {
    if (j == vi) continue;
    const Vec2 u = P[j];
    if (dist(u, v) <= eps || !P.contains_segment(v, u)) continue;
    out.push_back(u);

    // First boundary hit strictly beyond u on the ray v -> u.
    const Vec2 dir = normalized(u - v);
    const double s_u = dist(u, v);
    double s_best = std::numeric_limits<double>::max();
    for (int e = 0; e < n; ++e) {
      const Vec2 a = P[e];
      const Vec2 b = P.vertex(e + 1);
      const double denom = cross(dir, b - a);
      if (std::abs(denom) < 1e-15) continue;
      const double s = cross(a - v, b - a) / denom;
      const double t = cross(a - v, dir) / denom;
      if (s <= s_u + eps || t < -1e-12 || t > 1.0 + 1e-12) continue;
      s_best = std::min(s_best, s);
    }
    if (s_best < std::numeric_limits<double>::max()) {
      Vec2 hit = v + s_best * dir;
      if (auto snapped = P.snap_to_boundary(hit)) admit(*snapped);
    }
  }

  for (int e = 0; e < n; ++e) {
    const Vec2 a = P[e];
    const Vec2 b = P.vertex(e + 1);
    double t = 0.0;
    const Vec2 f = closest_point_on_segment(v, a, b, &t);
    if (t <= 0.0 || t >= 1.0) continue;
    admit(f);
  }

  const double len = P.boundary_length();
  for (int k = 0; k < n_samples; ++k) {
    admit(P.boundary_point(len * (k + 0.5) / n_samples));
  }

  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [eps](Vec2 a, Vec2 b) { return dist(a, b) <= eps; }),
            out.end());
  return out;
}

std::vector<Violation> violating_chords(const Polygon& P, double vartheta, int n_samples,
                                        ChordFilter filter, double eta, long* examined) {
  std::vector<Violation> out;
  if (P.is_convex() || vartheta <= 0.0) return out;
  const double h1 = P.boundary_length();
  // A violating chord is short: min-side diameter is at most a quarter
  // perimeter plus half the chord, so |chord| < vartheta*h1/(4-2*vartheta).
  const double prefilter = vartheta * h1 / (4.0 - 2.0 * vartheta);
  const double tol = 1e-9 * h1 + P.eps();
  for (int vi : P.concave_indices()) {
    const Vec2 v = P[vi];
    for (const Vec2& w : chord_candidates(P, vi, n_samples)) {
      if (examined) ++*examined;
      const double clen = dist(v, w);
      if (clen >= prefilter) continue;
      SplitResult split;
      try {
        split = split_by_chord(P, v, w);
      } catch (const Error&) {
        continue;  // chord does not induce a two-piece partition
      }
      const double upper =
          0.5 * std::min(split.q1.boundary_length(), split.q2.boundary_length());
      if (clen >= vartheta * upper) continue;
      const double dmin = std::min(side_diameter(split.q1), side_diameter(split.q2));
      const double margin = vartheta * dmin - clen;
      if (margin <= tol) continue;
      if (filter == ChordFilter::SP && !check_SP(P, split, eta)) continue;
      if (filter == ChordFilter::WSP && !check_WSP(P, split, eta)) continue;
      out.push_back(Violation{std::move(split), dmin, margin});
    }
  }
  return out;
}

bool chord_lex_less(const Chord& a, const Chord& b) {
  if (a.v != b.v) return lex_less(a.v, b.v);
  return lex_less(a.w, b.w);
}

}  // namespace

SemiconvexCert certify_semiconvex(const Polygon& P, double vartheta,
                                  const CandidateConfig& search) {
  SemiconvexCert cert;
  cert.vartheta = vartheta;
  long examined = 0;
  auto viols = violating_chords(P, vartheta, search.boundary_samples,
                                search.restrict_to_sp ? ChordFilter::SP : ChordFilter::None,
                                search.eta, &examined);
  cert.candidates_examined = examined;
  cert.pass = viols.empty();
  if (!cert.pass) {
    auto worst = std::max_element(
        viols.begin(), viols.end(), [](const Violation& a, const Violation& b) {
          if (a.margin != b.margin) return a.margin < b.margin;
          return chord_lex_less(b.split.chord, a.split.chord);
        });
    cert.counterexample = worst->split.chord;
    cert.counterexample_min_diameter = worst->dmin;
  }
  return cert;
}

namespace {

void orient_selected_first(SplitResult& s) {
  if (select_Qvw(s) == QSide::Q2) {
    std::swap(s.q1, s.q2);
    std::swap(s.n1, s.n2);
  }
}

// Re-split with the far endpoint moved off a vertex, keeping the violation
// and the weak admissibility intact. Returns nullopt if neither direction
// along the boundary works.
std::optional<SplitResult> perturb_off_vertex(const Polygon& P, const SplitResult& orig,
                                              const SemiconvexParams& params) {
  const Vec2 v = orig.chord.v;
  const Vec2 w = orig.chord.w;
  const double len = P.boundary_length();
  const double tol = 1e-9 * len + P.eps();
  int j = P.vertex_near(w);
  if (j < 0) return orig;  // already off the vertices
  const double s_w = P.cumulative_length(j);
  for (double sgn : {1.0, -1.0}) {
    double s = std::fmod(s_w + sgn * 10.0 * P.eps() + len, len);
    const Vec2 w2 = P.boundary_point(s);
    if (dist(w2, v) <= P.eps()) continue;
    SplitResult split;
    try {
      split = split_by_chord(P, v, w2);
    } catch (const Error&) {
      continue;
    }
    const double clen = split.chord.length();
    const double dmin = std::min(side_diameter(split.q1), side_diameter(split.q2));
    if (params.vartheta * dmin - clen <= tol) continue;
    if (!check_WSP(P, split, params.eta)) continue;
    orient_selected_first(split);
    return split;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SplitResult> find_splitting_chord(const Polygon& P,
                                                const SemiconvexParams& params) {
  auto viols =
      violating_chords(P, params.vartheta, 256, ChordFilter::WSP, params.eta, nullptr);
  if (viols.empty()) return std::nullopt;

  for (auto& c : viols) orient_selected_first(c.split);
  std::sort(viols.begin(), viols.end(), [](const Violation& a, const Violation& b) {
    if (a.split.n1 != b.split.n1) return a.split.n1 < b.split.n1;
    const double area_a = a.split.q1.area();
    const double area_b = b.split.q1.area();
    if (area_a != area_b) return area_a < area_b;
    return chord_lex_less(a.split.chord, b.split.chord);
  });

  CandidateConfig verify;
  verify.restrict_to_sp = true;
  verify.eta = params.eta;
  const double tol = 1e-9 * P.boundary_length();

  for (const auto& c : viols) {
    auto chosen = perturb_off_vertex(P, c.split, params);
    if (!chosen) continue;
    if (!certify_semiconvex(chosen->q1, params.vartheta_tilde, verify).pass) continue;
    const double clen = chosen->chord.length();
    if (clen > params.theta * (chosen->q1.boundary_length() - clen) + tol) continue;
    return chosen;
  }
  return std::nullopt;
}

SemiconvexDecomposition decompose_semiconvex(const Polygon& P,
                                             const SemiconvexParams& params) {
  SemiconvexDecomposition out;
  out.params = params;
  out.partition.input = P;

  const int cap = 1000 + 300 * static_cast<int>(P.concave_indices().size());
  int iters = 0;

  auto add_piece = [&](const Polygon& q, SemiconvexCert cert) {
    out.partition.pieces.push_back(q);
    out.certs.push_back(std::move(cert));
  };

  std::vector<Polygon> work{P};
  while (!work.empty()) {
    Polygon rest = std::move(work.back());
    work.pop_back();
    while (true) {
      if (++iters > cap)
        throw Error(Err::IterationLimitExceeded, "semiconvex split loop exceeded its cap");
      auto split = find_splitting_chord(rest, params);
      if (!split) {
        add_piece(rest, certify_semiconvex(rest, params.piece_vartheta));
        break;
      }
      out.partition.cuts.push_back(split->chord);
      SemiconvexCert cert = certify_semiconvex(split->q1, params.piece_vartheta);
      if (cert.pass) {
        add_piece(split->q1, std::move(cert));
      } else {
        work.push_back(split->q1);  // split further rather than keep a bad piece
      }
      rest = split->q2;
    }
  }
  return out;
}

bool check_part_seg_criterion(const Polygon& P, const Chord& chord, double alpha,
                              QSide which) {
  SplitResult s = split_by_chord(P, chord.v, chord.w);
  const double eps = P.eps();
  auto base_angle = [](Vec2 apex, Vec2 other, Vec2 u) {
    const Vec2 d1 = normalized(other - apex);
    const Vec2 d2 = normalized(u - apex);
    return std::acos(std::clamp(dot(d1, d2), -1.0, 1.0));
  };
  auto side_ok = [&](const Polygon& q) {
    for (int ci : q.concave_indices()) {
      const Vec2 u = q[ci];
      if (dist(u, chord.v) <= eps || dist(u, chord.w) <= eps) continue;
      const double a1 = base_angle(chord.v, chord.w, u);
      const double a2 = base_angle(chord.w, chord.v, u);
      if (std::max(a1, a2) < alpha) return false;
    }
    return true;
  };
  switch (which) {
    case QSide::Q1:
      return side_ok(s.q1);
    case QSide::Q2:
      return side_ok(s.q2);
    case QSide::Both:
      break;
  }
  return side_ok(s.q1) && side_ok(s.q2);
}

}  // namespace johncut
