#include "johncut/fixtures.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "grid_cells.h"
#include "johncut/errors.h"
#include "johncut/extents.h"

namespace johncut {

namespace {

constexpr double kPi = std::numbers::pi;

double tent_angle(int i, double eta) { return kPi / 3.0 * std::pow(eta, i - 1); }

std::vector<Vec2> tent_generation(const std::vector<Vec2>& ring, double phi) {
  std::vector<Vec2> out;
  out.reserve(ring.size() * 4);
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ring[i], b = ring[(i + 1) % n];
    const Vec2 d = (b - a) / 3.0;
    const Vec2 m = 0.5 * (a + b);
    // Apex to the right of travel: outward for a counter-clockwise ring.
    const Vec2 apex = m + (norm(d) * 0.5 * std::tan(phi)) * normalized(perp_cw(d));
    out.push_back(a);
    out.push_back(a + d);
    out.push_back(apex);
    out.push_back(b - d);
  }
  return out;
}

}  // namespace

Polygon koch_variant(int generation, double eta, double side) {
  if (generation < 0 || generation > 10)
    throw Error(Err::BadInput, "koch generation out of range");
  if (!(eta > 0.0 && eta <= 1.0)) throw Error(Err::BadInput, "eta must lie in (0,1]");
  const double h = side * std::sqrt(3.0) / 2.0;
  std::vector<Vec2> ring{{0.0, 0.0}, {side, 0.0}, {side / 2.0, h}};
  for (int i = 1; i <= generation; ++i) ring = tent_generation(ring, tent_angle(i, eta));
  // Full validation is quadratic; trust the construction for large rings.
  if (ring.size() <= 1000) return Polygon::validate(ring);
  return Polygon::from_ring(ring);
}

double koch_perimeter(int generation, double eta, double side) {
  double L = 3.0 * side;
  for (int i = 1; i <= generation; ++i)
    L *= 2.0 / 3.0 + 1.0 / (3.0 * std::cos(tent_angle(i, eta)));
  return L;
}

Polygon comb(int teeth) {
  if (teeth < 1 || teeth > 64) throw Error(Err::BadInput, "tooth count out of range");
  const double w = 2.0 * teeth - 1.0;
  std::vector<Vec2> ring{{0.0, 0.0}, {w, 0.0}, {w, 2.0}};
  for (int j = teeth - 1; j >= 1; --j) {
    const double x = 2.0 * j;
    const double depth = 0.2 + 0.15 * (j - 1);  // deepest slot first
    ring.push_back({x, 2.0});
    ring.push_back({x, depth});
    ring.push_back({x - 1.0, depth});
    ring.push_back({x - 1.0, 2.0});
  }
  ring.push_back({0.0, 2.0});
  return Polygon::validate(ring);
}

Polygon notched_rect(double gap) {
  if (!(gap > 0.0 && gap < 1.0)) throw Error(Err::BadInput, "gap must lie in (0,1)");
  return Polygon::validate({{0.0, 0.0},
                            {10.0, 0.0},
                            {10.0, 1.0},
                            {5.0 + gap / 2.0, 1.0},
                            {5.0, gap},
                            {5.0 - gap / 2.0, 1.0},
                            {0.0, 1.0}});
}

Polygon notch_end() {
  return Polygon::validate({{0.0, 0.0},
                            {200.0, 0.0},
                            {200.0, 1.0},
                            {2.05, 1.0},
                            {2.0, 0.9},
                            {1.95, 1.0},
                            {0.0, 1.0}});
}

Polygon spiral(int turns) {
  if (turns < 1 || turns > 16) throw Error(Err::BadInput, "turn count out of range");
  const int half = 2 * turns + 2;
  const int n = 2 * half + 1;
  detail::CellMask kept(n, std::vector<bool>(n, false));
  int x = half, y = half;
  kept[x][y] = true;
  const int dx[4] = {1, 0, -1, 0};
  const int dy[4] = {0, 1, 0, -1};
  for (int s = 0; s < 2 * turns; ++s) {
    const int len = 2 * (s / 2 + 1);
    for (int k = 0; k < len; ++k) {
      x += dx[s % 4];
      y += dy[s % 4];
      kept[x][y] = true;
    }
  }
  std::vector<std::vector<int>> label;
  if (detail::label_components(kept, label) != 1)
    throw Error(Err::ConstructionFailed, "spiral arm disconnected");
  auto rings = detail::trace_component(label, 0, Vec2{0.0, 0.0}, 1.0);
  if (rings.size() != 1) throw Error(Err::ConstructionFailed, "spiral boundary not a ring");
  return Polygon::validate(rings.front());
}

Polygon l_shape() {
  return Polygon::validate(
      {{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}});
}

Polygon random_convex(unsigned seed, int points) {
  if (points < 3 || points > 1000) throw Error(Err::BadInput, "point count out of range");
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> pts(static_cast<std::size_t>(points));
  for (Vec2& p : pts) p = Vec2{u(gen), u(gen)};
  std::vector<Vec2> hull = convex_hull(pts);
  if (hull.size() < 3) return random_convex(seed + 1, points);
  return Polygon::validate(hull);
}

Polygon blob(unsigned seed, int points) {
  if (points < 5 || points > 256) throw Error(Err::BadInput, "point count out of range");
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = kPi * u(gen);
  std::vector<Vec2> ring(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double phi = 2.0 * kPi * k / points;
    const double r = 1.0 + 0.35 * std::sin(3.0 * phi + a) + 0.1 * u(gen);
    ring[static_cast<std::size_t>(k)] = Vec2{r * std::cos(phi), r * std::sin(phi)};
  }
  return Polygon::validate(ring);
}

DomainInput circle_input(double radius, int samples) {
  DomainInput d;
  d.outer.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double phi = 2.0 * kPi * k / samples;
    d.outer.push_back({radius * std::cos(phi), radius * std::sin(phi)});
  }
  d.spacing = 2.0 * kPi * radius / samples;
  return d;
}

DomainInput rounded_square_input(double corner_radius, int samples) {
  const double r = corner_radius;
  if (!(r > 0.0 && r < 0.5)) throw Error(Err::BadInput, "corner radius out of range");
  const double straight = 1.0 - 2.0 * r;
  const double L = 4.0 * straight + 2.0 * kPi * r;
  // Centers of the corner arcs, starting after the bottom edge.
  const Vec2 centers[4] = {{1.0 - r, r}, {1.0 - r, 1.0 - r}, {r, 1.0 - r}, {r, r}};
  const double base[4] = {-kPi / 2.0, 0.0, kPi / 2.0, kPi};
  DomainInput d;
  d.outer.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    double s = L * k / samples;
    bool placed = false;
    for (int side = 0; side < 4 && !placed; ++side) {
      if (s < straight) {
        const Vec2 a{r, 0.0}, dir{1.0, 0.0};
        const Vec2 start = rotate(a - Vec2{0.5, 0.5}, side * kPi / 2.0) + Vec2{0.5, 0.5};
        const Vec2 e = rotate(dir, side * kPi / 2.0);
        d.outer.push_back(start + s * e);
        placed = true;
      } else if (s < straight + kPi * r / 2.0) {
        const double ang = base[side] + (s - straight) / r;
        d.outer.push_back(centers[side] + Vec2{r * std::cos(ang), r * std::sin(ang)});
        placed = true;
      } else {
        s -= straight + kPi * r / 2.0;
      }
    }
  }
  d.spacing = L / samples;
  return d;
}

DomainInput ellipse_input(double a, double b, int samples) {
  DomainInput d;
  d.outer.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double phi = 2.0 * kPi * k / samples;
    d.outer.push_back({a * std::cos(phi), b * std::sin(phi)});
  }
  double m = 0.0;
  for (std::size_t i = 0; i < d.outer.size(); ++i)
    m = std::max(m, dist(d.outer[i], d.outer[(i + 1) % d.outer.size()]));
  d.spacing = m;
  return d;
}

DomainInput annulus_input() {
  DomainInput d;
  d.outer = {{0.0, 0.0}, {10.0, 0.0}, {10.0, 10.0}, {0.0, 10.0}};
  d.holes = {{{4.0, 4.0}, {4.0, 6.0}, {6.0, 6.0}, {6.0, 4.0}}};  // clockwise
  d.spacing = 10.0;
  return d;
}

Polygon make_fixture(const FixtureSpec& spec) {
  if (spec.kind == "koch-variant") return koch_variant(spec.generation);
  if (spec.kind == "comb") return comb(spec.teeth);
  if (spec.kind == "notched-rect") return notched_rect(spec.gap);
  if (spec.kind == "spiral") return spiral(spec.turns);
  if (spec.kind == "l-shape") return l_shape();
  if (spec.kind == "random-convex") return random_convex(spec.seed);
  if (spec.kind == "blob") return blob(spec.seed);
  throw Error(Err::UnknownKind, "unknown fixture kind: " + spec.kind);
}

}  // namespace johncut
