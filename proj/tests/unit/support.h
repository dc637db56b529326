#pragma once

#include <cmath>
#include <vector>

#include "johncut/polygon.h"

inline johncut::Polygon unit_square() {
  return johncut::Polygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline johncut::Polygon rect(double w, double h) {
  return johncut::Polygon::validate({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

inline johncut::Polygon l_shape_poly() {
  return johncut::Polygon::validate({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

inline johncut::Polygon transformed(const johncut::Polygon& P, double angle, johncut::Vec2 off) {
  std::vector<johncut::Vec2> v;
  v.reserve(P.verts().size());
  for (const johncut::Vec2& p : P.verts()) v.push_back(rotate(p, angle) + off);
  return johncut::Polygon::validate(std::move(v));
}
