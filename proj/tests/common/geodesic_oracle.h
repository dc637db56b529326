#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "johncut/polygon.h"

// Brute-force shortest path on a dense graph: polygon vertices, extra
// boundary samples, and the two query points, with an edge wherever the
// connecting segment stays inside the polygon. Slow but independent of the
// visibility-graph code under test.
// Same graph with the static part (vertices + samples) cached, for
// many queries against one polygon.
class GeodesicOracle {
 public:
  explicit GeodesicOracle(const johncut::Polygon& P, int boundary_samples = 128) : P_(P) {
    using johncut::Vec2;
    for (const Vec2& v : P.verts()) nodes_.push_back(v);
    const double L = P.boundary_length();
    for (int i = 0; i < boundary_samples; ++i)
      nodes_.push_back(P.boundary_point(L * (static_cast<double>(i) + 0.5) /
                                        static_cast<double>(boundary_samples)));
    const int n = static_cast<int>(nodes_.size());
    adj_.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (P.contains_segment(nodes_[i], nodes_[j])) {
          const double w = dist(nodes_[i], nodes_[j]);
          adj_[i].push_back({j, w});
          adj_[j].push_back({i, w});
        }
  }

  double query(johncut::Vec2 p, johncut::Vec2 q) const {
    const int n = static_cast<int>(nodes_.size());
    // Node n = source p, node n+1 = target q.
    std::vector<std::vector<std::pair<int, double>>> extra(2);
    if (P_.contains_segment(p, q)) return dist(p, q);
    for (int i = 0; i < n; ++i) {
      if (P_.contains_segment(p, nodes_[i])) extra[0].push_back({i, dist(p, nodes_[i])});
      if (P_.contains_segment(nodes_[i], q)) extra[1].push_back({i, dist(q, nodes_[i])});
    }
    std::vector<double> d(n + 2, std::numeric_limits<double>::max());
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>>
        pq;
    std::vector<double> dq_edge(n, std::numeric_limits<double>::max());
    for (auto [i, w] : extra[1]) dq_edge[i] = w;
    d[n] = 0.0;
    pq.push({0.0, n});
    for (auto [i, w] : extra[0]) {
      d[i] = w;
      pq.push({w, i});
    }
    while (!pq.empty()) {
      auto [dd, i] = pq.top();
      pq.pop();
      if (dd > d[i] || i >= n) continue;
      if (dq_edge[i] < std::numeric_limits<double>::max() && d[i] + dq_edge[i] < d[n + 1])
        d[n + 1] = d[i] + dq_edge[i];
      for (auto [j, w] : adj_[i])
        if (d[i] + w < d[j]) {
          d[j] = d[i] + w;
          pq.push({d[j], j});
        }
    }
    return d[n + 1];
  }

 private:
  johncut::Polygon P_;
  std::vector<johncut::Vec2> nodes_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

inline double oracle_geodesic(const johncut::Polygon& P, johncut::Vec2 p, johncut::Vec2 q,
                              int boundary_samples = 512) {
  using johncut::Vec2;
  std::vector<Vec2> nodes{p, q};
  for (const Vec2& v : P.verts()) nodes.push_back(v);
  const double L = P.boundary_length();
  for (int i = 0; i < boundary_samples; ++i)
    nodes.push_back(P.boundary_point(L * (static_cast<double>(i) + 0.5) /
                                     static_cast<double>(boundary_samples)));

  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (P.contains_segment(nodes[i], nodes[j])) {
        const double w = dist(nodes[i], nodes[j]);
        adj[i].push_back({j, w});
        adj[j].push_back({i, w});
      }

  std::vector<double> d(n, std::numeric_limits<double>::max());
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>, std::greater<>>
      pq;
  d[0] = 0.0;
  pq.push({0.0, 0});
  while (!pq.empty()) {
    auto [dd, i] = pq.top();
    pq.pop();
    if (dd > d[i]) continue;
    if (i == 1) break;
    for (auto [j, w] : adj[i])
      if (d[i] + w < d[j]) {
        d[j] = d[i] + w;
        pq.push({d[j], j});
      }
  }
  return d[1];
}
