#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "johncut/errors.h"
#include "johncut/geometry.h"

namespace johncut::detail {

using CellMask = std::vector<std::vector<bool>>;  // [i][j], i along x

// Removes diagonal pinches: kept cells touching only at a corner would
// make the traced ring touch itself there.
inline void remove_pinches(CellMask& kept) {
  const int nx = static_cast<int>(kept.size());
  const int ny = nx > 0 ? static_cast<int>(kept[0].size()) : 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < nx; ++i) {
      for (int j = 0; j + 1 < ny; ++j) {
        const bool a = kept[i][j], b = kept[i + 1][j];
        const bool c = kept[i][j + 1], d = kept[i + 1][j + 1];
        if (a && d && !b && !c) {
          kept[i][j] = false;
          changed = true;
        } else if (b && c && !a && !d) {
          kept[i + 1][j] = false;
          changed = true;
        }
      }
    }
  }
}

// Connected components of kept cells, 4-neighbor adjacency. Returns a
// label per cell (-1 for dropped) and the component count.
inline int label_components(const CellMask& kept, std::vector<std::vector<int>>& label) {
  const int nx = static_cast<int>(kept.size());
  const int ny = nx > 0 ? static_cast<int>(kept[0].size()) : 0;
  label.assign(nx, std::vector<int>(ny, -1));
  int next = 0;
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!kept[i][j] || label[i][j] >= 0) continue;
      stack.push_back({i, j});
      label[i][j] = next;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int x2 = x + dx[k], y2 = y + dy[k];
          if (x2 < 0 || x2 >= nx || y2 < 0 || y2 >= ny) continue;
          if (!kept[x2][y2] || label[x2][y2] >= 0) continue;
          label[x2][y2] = next;
          stack.push_back({x2, y2});
        }
      }
      ++next;
    }
  }
  return next;
}

// Boundary rings of one cell component on the integer corner grid,
// counterclockwise, collinear runs collapsed. Expects a pinch-free mask.
inline std::vector<std::vector<Vec2>> trace_component(
    const std::vector<std::vector<int>>& label, int comp, Vec2 origin, double side) {
  const int nx = static_cast<int>(label.size());
  const int ny = nx > 0 ? static_cast<int>(label[0].size()) : 0;
  auto mine = [&](int i, int j) {
    return i >= 0 && i < nx && j >= 0 && j < ny && label[i][j] == comp;
  };
  auto key = [ny](int i, int j) {
    return static_cast<std::int64_t>(i) * (ny + 2) + j;
  };
  // Directed corner edges with the component on the left.
  std::unordered_map<std::int64_t, std::pair<int, int>> next;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!mine(i, j)) continue;
      if (!mine(i, j - 1)) next[key(i, j)] = {i + 1, j};
      if (!mine(i + 1, j)) next[key(i + 1, j)] = {i + 1, j + 1};
      if (!mine(i, j + 1)) next[key(i + 1, j + 1)] = {i, j + 1};
      if (!mine(i - 1, j)) next[key(i, j + 1)] = {i, j};
    }
  }
  std::vector<std::vector<Vec2>> rings;
  while (!next.empty()) {
    auto it = next.begin();
    std::int64_t startk = it->first;
    const int si = static_cast<int>(startk / (ny + 2));
    const int sj = static_cast<int>(startk % (ny + 2));
    std::vector<std::pair<int, int>> corners{{si, sj}};
    std::int64_t cur = startk;
    for (;;) {
      auto jt = next.find(cur);
      if (jt == next.end())
        throw Error(Err::ConstructionFailed, "cell boundary trace broke");
      const auto [ti, tj] = jt->second;
      next.erase(jt);
      if (key(ti, tj) == startk) break;
      corners.push_back({ti, tj});
      cur = key(ti, tj);
    }
    std::vector<Vec2> ring;
    const int n = static_cast<int>(corners.size());
    for (int k = 0; k < n; ++k) {
      const auto [pi, pj] = corners[(k - 1 + n) % n];
      const auto [ci, cj] = corners[k];
      const auto [qi, qj] = corners[(k + 1) % n];
      if ((ci - pi) == (qi - ci) && (cj - pj) == (qj - cj)) continue;  // collinear
      ring.push_back(Vec2{origin.x + side * ci, origin.y + side * cj});
    }
    rings.push_back(std::move(ring));
  }
  return rings;
}

}  // namespace johncut::detail
