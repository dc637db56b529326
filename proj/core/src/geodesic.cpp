#include "johncut/geodesic.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "johncut/extents.h"

namespace johncut {

namespace {

constexpr double kInf = std::numeric_limits<double>::max();

struct DijkstraOut {
  std::vector<double> dist;
  std::vector<int> parent;
};

// Uniform-cost search; equal-distance ties resolved toward the
// lexicographically smaller predecessor so paths are deterministic.
DijkstraOut dijkstra(const std::vector<Vec2>& nodes,
                     const std::vector<std::vector<std::pair<int, double>>>& adj, int src) {
  int n = static_cast<int>(nodes.size());
  DijkstraOut out;
  out.dist.assign(n, kInf);
  out.parent.assign(n, -1);
  out.dist[src] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > out.dist[u]) continue;
    for (auto [v, w] : adj[u]) {
      double nd = d + w;
      if (nd < out.dist[v] ||
          (nd == out.dist[v] && out.parent[v] >= 0 && lex_less(nodes[u], nodes[out.parent[v]]))) {
        out.dist[v] = nd;
        out.parent[v] = u;
        pq.push({nd, v});
      }
    }
  }
  return out;
}

std::vector<Vec2> graph_nodes(const Polygon& P, const std::vector<Vec2>& extra) {
  std::vector<Vec2> nodes = extra;
  for (int i : P.concave_indices()) {
    Vec2 c = P[i];
    bool dup = false;
    for (const Vec2& e : nodes) dup = dup || dist(e, c) <= P.eps();
    if (!dup) nodes.push_back(c);
  }
  return nodes;
}

std::vector<std::vector<std::pair<int, double>>> visibility_adjacency(const Polygon& P,
                                                                      const std::vector<Vec2>& nodes) {
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (P.contains_segment(nodes[i], nodes[j])) {
        double w = dist(nodes[i], nodes[j]);
        adj[i].push_back({j, w});
        adj[j].push_back({i, w});
      }
    }
  }
  return adj;
}

GeodesicPath path_from_parents(const std::vector<Vec2>& nodes, const DijkstraOut& out, int src,
                               int dst) {
  GeodesicPath gp;
  std::vector<int> idx;
  for (int u = dst; u != -1; u = out.parent[u]) {
    idx.push_back(u);
    if (u == src) break;
  }
  std::reverse(idx.begin(), idx.end());
  gp.waypoints.reserve(idx.size());
  gp.t.reserve(idx.size());
  double acc = 0.0;
  for (size_t k = 0; k < idx.size(); ++k) {
    gp.waypoints.push_back(nodes[idx[k]]);
    if (k > 0) acc += dist(nodes[idx[k - 1]], nodes[idx[k]]);
    gp.t.push_back(acc);
  }
  gp.length = acc;
  return gp;
}

}  // namespace

GeodesicPath geodesic_distance(const Polygon& P, Vec2 p, Vec2 q) {
  if (!P.contains(p) || !P.contains(q)) throw Error(Err::PointOutside, "geodesic endpoint outside");
  GeodesicPath gp;
  if (P.contains_segment(p, q)) {
    gp.waypoints = {p, q};
    gp.t = {0.0, dist(p, q)};
    gp.length = dist(p, q);
    return gp;
  }
  std::vector<Vec2> nodes = graph_nodes(P, {p, q});
  auto adj = visibility_adjacency(P, nodes);
  DijkstraOut out = dijkstra(nodes, adj, 0);
  if (out.dist[1] >= kInf) throw Error(Err::ConstructionFailed, "no geodesic path found");
  return path_from_parents(nodes, out, 0, 1);
}

DiameterResult intrinsic_diameter(const Polygon& P) {
  DiameterResult r;
  if (P.is_convex()) {
    std::vector<Vec2> h = convex_hull(P.verts());
    for (size_t i = 0; i < h.size(); ++i)
      for (size_t j = i + 1; j < h.size(); ++j) {
        double d = dist(h[i], h[j]);
        if (d > r.d) {
          r.d = d;
          r.a = h[i];
          r.b = h[j];
        }
      }
    return r;
  }
  const std::vector<Vec2>& nodes = P.verts();
  auto adj = visibility_adjacency(P, nodes);
  int n = static_cast<int>(nodes.size());
  for (int i = 0; i < n; ++i) {
    DijkstraOut out = dijkstra(nodes, adj, i);
    for (int j = i + 1; j < n; ++j) {
      if (out.dist[j] < kInf && out.dist[j] > r.d) {
        r.d = out.dist[j];
        r.a = nodes[i];
        r.b = nodes[j];
      }
    }
  }
  return r;
}

double geodesic_distance_to_segment(const Polygon& P, Vec2 p, const Segment& s) {
  if (!P.contains(p)) throw Error(Err::PointOutside, "point outside polygon");
  if (!P.contains_segment(s.a, s.b))
    throw Error(Err::SegmentNotInPolygon, "target segment not inside polygon");
  // Zero-cost target set: from every graph node, a straight visible drop to
  // the segment closes the path.
  std::vector<Vec2> nodes = graph_nodes(P, {p, s.a, s.b});
  auto adj = visibility_adjacency(P, nodes);
  DijkstraOut out = dijkstra(nodes, adj, 0);
  double best = kInf;
  constexpr int kSegSamples = 16;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (out.dist[i] >= kInf) continue;
    Vec2 foot = closest_point_on_segment(nodes[i], s.a, s.b);
    if (P.contains_segment(nodes[i], foot)) best = std::min(best, out.dist[i] + dist(nodes[i], foot));
    for (int k = 0; k <= kSegSamples; ++k) {
      Vec2 tgt = s.point_at(static_cast<double>(k) / kSegSamples);
      if (P.contains_segment(nodes[i], tgt)) best = std::min(best, out.dist[i] + dist(nodes[i], tgt));
    }
  }
  return best;
}

}  // namespace johncut
