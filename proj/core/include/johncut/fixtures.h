#pragma once

#include <string>

#include "johncut/polygon.h"
#include "johncut/smooth.h"

namespace johncut {

// Triangle with tent bumps: generation i replaces the middle third of
// every edge by a tent with base angle pi/3 * eta^(i-1), so the perimeter
// multiplier per generation is 2/3 + 1/(3 cos(angle)) and stays summable
// for eta < 1.
Polygon koch_variant(int generation, double eta = 0.5, double side = 1.0);
double koch_perimeter(int generation, double eta = 0.5, double side = 1.0);

// k teeth of size 1x2 on a thin bar, slots descending to staggered depths.
Polygon comb(int teeth);

// 10x1 rectangle with a sharp notch at x=5: mouth width and remaining
// ledge under the tip both equal gap.
Polygon notched_rect(double gap);

// 100x1 rectangle with one shallow notch near the left end.
Polygon notch_end();

// Rectangular spiral with unit arm width and unit gaps.
Polygon spiral(int turns);

Polygon l_shape();

// Convex hull of seeded random points in the unit square.
Polygon random_convex(unsigned seed, int points = 12);

// Star-shaped polygon with seeded radial jitter.
Polygon blob(unsigned seed, int points = 24);

// Densely sampled smooth boundaries.
DomainInput circle_input(double radius = 1.0, int samples = 512);
DomainInput rounded_square_input(double corner_radius = 0.05, int samples = 1600);
DomainInput ellipse_input(double a = 2.0, double b = 0.5, int samples = 1024);

// Square annulus [0,10]^2 minus [4,6]^2.
DomainInput annulus_input();

struct FixtureSpec {
  std::string kind;
  int generation = 2;   // koch-variant
  int teeth = 3;        // comb
  double gap = 0.1;     // notched-rect
  int turns = 4;        // spiral
  unsigned seed = 42;   // random-convex, blob
};

// Dispatch by kind name; throws UnknownKind.
Polygon make_fixture(const FixtureSpec& spec);

}  // namespace johncut
