#include "johncut/polygon.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <unordered_map>

#include "johncut/predicates.h"

namespace johncut {

double Tolerance::scale() {
  static const double s = [] {
    if (const char* env = std::getenv("JOHNCUT_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return s;
}

double signed_area(const std::vector<Vec2>& ring) {
  double s = 0.0;
  int n = static_cast<int>(ring.size());
  for (int i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

namespace {

std::vector<Vec2> collapse_duplicates(std::vector<Vec2> pts, double eps) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const Vec2& p : pts) {
    if (out.empty() || dist(out.back(), p) > eps) out.push_back(p);
  }
  while (out.size() > 1 && dist(out.front(), out.back()) <= eps) out.pop_back();
  return out;
}

// Candidate edge pairs from a uniform grid so simplicity checking stays close
// to linear on large well-distributed inputs.
void check_simplicity(const std::vector<Vec2>& v, double /*eps*/) {
  int n = static_cast<int>(v.size());
  double total = 0.0;
  BBox box = bbox_of(v);
  for (int i = 0; i < n; ++i) total += dist(v[i], v[(i + 1) % n]);
  double cell = std::max(total / n, box.diagonal() * 1e-6);
  auto key = [&](int cx, int cy) { return static_cast<long long>(cx) * 2000003LL + cy; };
  std::unordered_map<long long, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % n];
    int x0 = static_cast<int>(std::floor(std::min(a.x, b.x) / cell));
    int x1 = static_cast<int>(std::floor(std::max(a.x, b.x) / cell));
    int y0 = static_cast<int>(std::floor(std::min(a.y, b.y) / cell));
    int y1 = static_cast<int>(std::floor(std::max(a.y, b.y) / cell));
    for (int cx = x0; cx <= x1; ++cx)
      for (int cy = y0; cy <= y1; ++cy) buckets[key(cx, cy)].push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto& [k, ids] : buckets) {
    for (size_t s = 0; s < ids.size(); ++s)
      for (size_t t = s + 1; t < ids.size(); ++t)
        pairs.emplace_back(std::min(ids[s], ids[t]), std::max(ids[s], ids[t]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [i, j] : pairs) {
    bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
    Vec2 a = v[i], b = v[(i + 1) % n];
    Vec2 c = v[j], d = v[(j + 1) % n];
    SegX k = classify_segments(a, b, c, d);
    if (adjacent) {
      // Adjacent edges share exactly their common endpoint.
      if (k == SegX::Overlap) throw Error(Err::SelfIntersecting, "adjacent edges overlap");
    } else if (k != SegX::None) {
      throw Error(Err::SelfIntersecting, "non-adjacent edges intersect");
    }
  }
}

}  // namespace

Polygon Polygon::validate(std::vector<Vec2> pts) {
  if (pts.size() < 3) throw Error(Err::TooFewVertices, "need at least 3 vertices");
  for (const Vec2& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(Err::BadInput, "non-finite coordinate");
  }
  BBox box = bbox_of(pts);
  double eps = Tolerance::for_bbox(box).eps_geom;
  std::vector<Vec2> v = collapse_duplicates(std::move(pts), eps);
  if (v.size() < 3) throw Error(Err::TooFewVertices, "fewer than 3 distinct vertices");
  double a = signed_area(v);
  if (std::abs(a) <= eps * eps) throw Error(Err::DegenerateArea, "area below tolerance");
  if (a < 0.0) std::reverse(v.begin(), v.end());
  check_simplicity(v, eps);
  Polygon P;
  P.v_ = std::move(v);
  P.finish();
  return P;
}

Polygon Polygon::from_ring(std::vector<Vec2> pts) {
  BBox box = bbox_of(pts);
  double eps = Tolerance::for_bbox(box).eps_geom;
  std::vector<Vec2> v = collapse_duplicates(std::move(pts), eps);
  if (v.size() < 3) throw Error(Err::TooFewVertices, "ring degenerated");
  double a = signed_area(v);
  if (std::abs(a) <= eps * eps) throw Error(Err::DegenerateArea, "ring area below tolerance");
  if (a < 0.0) std::reverse(v.begin(), v.end());
  Polygon P;
  P.v_ = std::move(v);
  P.finish();
  return P;
}

void Polygon::finish() {
  int n = size();
  area_ = signed_area(v_);
  bbox_ = bbox_of(v_);
  eps_ = Tolerance::for_bbox(bbox_).eps_geom;
  cumlen_.assign(n + 1, 0.0);
  for (int i = 0; i < n; ++i) cumlen_[i + 1] = cumlen_[i] + dist(v_[i], v_[(i + 1) % n]);
  perim_ = cumlen_[n];
  concave_.clear();
  for (int i = 0; i < n; ++i)
    if (is_concave(i)) concave_.push_back(i);
}

double Polygon::interior_angle(int i) const {
  const Vec2& a = vertex(i - 1);
  const Vec2& b = vertex(i);
  const Vec2& c = vertex(i + 1);
  Vec2 din = b - a, dout = c - b;
  double turn = std::atan2(cross(din, dout), dot(din, dout));
  return std::numbers::pi - turn;  // in (0, 2pi) for a CCW simple polygon
}

bool Polygon::is_concave(int i) const {
  return orient_sign(vertex(i - 1), vertex(i), vertex(i + 1)) < 0;
}

bool Polygon::on_boundary(Vec2 p) const {
  int n = size();
  for (int i = 0; i < n; ++i)
    if (on_segment(p, v_[i], v_[(i + 1) % n])) return true;
  return false;
}

bool Polygon::contains(Vec2 p) const {
  if (!bbox_.contains(p)) return false;
  if (on_boundary(p)) return true;
  // Half-open crossing rule with exact orientation: robust through vertices.
  int n = size();
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Vec2& a = v_[i];
    const Vec2& b = v_[(i + 1) % n];
    if ((a.y <= p.y) != (b.y <= p.y)) {
      int side = orient_sign(a, b, p);
      if (b.y > a.y ? side > 0 : side < 0) inside = !inside;
    }
  }
  return inside;
}

bool Polygon::strictly_contains(Vec2 p) const { return !on_boundary(p) && contains(p); }

double Polygon::boundary_distance(Vec2 p) const {
  double best = std::numeric_limits<double>::max();
  int n = size();
  for (int i = 0; i < n; ++i) best = std::min(best, point_segment_dist(p, v_[i], v_[(i + 1) % n]));
  return best;
}

bool Polygon::contains_segment(Vec2 a, Vec2 b) const {
  if (!contains(a) || !contains(b)) return false;
  if (a == b) return true;
  std::vector<double> ts{0.0, 1.0};
  int n = size();
  for (int i = 0; i < n; ++i) intersection_params(a, b, v_[i], v_[(i + 1) % n], ts);
  std::sort(ts.begin(), ts.end());
  double prev = 0.0;
  bool first = true;
  for (double t : ts) {
    t = std::clamp(t, 0.0, 1.0);
    if (!first && t - prev > 1e-12) {
      Vec2 m = a + (0.5 * (prev + t)) * (b - a);
      if (!contains(m)) return false;
    }
    prev = t;
    first = false;
  }
  return true;
}

bool Polygon::contains_chord(Vec2 a, Vec2 b) const {
  const double len = dist(a, b);
  if (len <= eps_) return contains(a) && contains(b);
  const double s = std::min(10.0 * eps_ / len, 0.25);
  return contains_segment(a + s * (b - a), b + s * (a - b));
}

Vec2 Polygon::boundary_point(double s) const {
  int n = size();
  s = std::fmod(s, perim_);
  if (s < 0.0) s += perim_;
  int i = static_cast<int>(std::upper_bound(cumlen_.begin(), cumlen_.end(), s) -
                           cumlen_.begin()) -
          1;
  i = std::clamp(i, 0, n - 1);
  double seg = cumlen_[i + 1] - cumlen_[i];
  double t = seg > 0.0 ? (s - cumlen_[i]) / seg : 0.0;
  return v_[i] + t * (v_[(i + 1) % n] - v_[i]);
}

int Polygon::locate_on_boundary(Vec2 p, double* edge_t) const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    const Vec2& a = v_[i];
    const Vec2& b = v_[(i + 1) % n];
    if (on_segment(p, a, b)) {
      if (edge_t) {
        double len2 = dist_sq(a, b);
        *edge_t = len2 > 0.0 ? dot(p - a, b - a) / len2 : 0.0;
      }
      return i;
    }
  }
  return -1;
}

std::optional<Vec2> Polygon::snap_to_boundary(Vec2 p) const {
  double best = std::numeric_limits<double>::max();
  Vec2 best_pt;
  int n = size();
  for (int i = 0; i < n; ++i) {
    Vec2 q = closest_point_on_segment(p, v_[i], v_[(i + 1) % n]);
    double d = dist(p, q);
    if (d < best) {
      best = d;
      best_pt = q;
    }
  }
  if (best <= eps_) return best_pt;
  return std::nullopt;
}

int Polygon::vertex_near(Vec2 p) const {
  int n = size();
  for (int i = 0; i < n; ++i)
    if (dist(v_[i], p) <= eps_) return i;
  return -1;
}

Vec2 Polygon::interior_point() const {
  int n = size();
  int i0 = 0;
  for (int i = 1; i < n; ++i)
    if (lex_less(v_[i], v_[i0])) i0 = i;
  // Lowest-leftmost vertex is convex in a CCW ring; its ear triangle either
  // is empty (centroid interior) or holds a vertex whose farthest-from-base
  // representative gives an interior diagonal.
  Vec2 a = vertex(i0 - 1), v = vertex(i0), c = vertex(i0 + 1);
  int best = -1;
  double best_d = -1.0;
  for (int i = 0; i < n; ++i) {
    if (i == i0) continue;
    const Vec2& p = v_[i];
    if (p == a || p == c) continue;
    if (orient_sign(a, v, p) > 0 && orient_sign(v, c, p) > 0 && orient_sign(c, a, p) > 0) {
      double d = std::abs(cross(c - a, p - a));
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
  }
  if (best < 0) return (a + v + c) / 3.0;
  return (v + v_[best]) * 0.5;
}

bool rings_cyclically_equal(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double eps) {
  if (a.size() != b.size()) return false;
  int n = static_cast<int>(a.size());
  for (int shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = dist(a[i], b[(i + shift) % n]) <= eps;
    if (ok) return true;
  }
  return false;
}

}  // namespace johncut
