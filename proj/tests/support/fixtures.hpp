#pragma once

#include <vector>

#include "sgspec/signed_graph.hpp"

namespace fixtures {

using sgspec::Sign;
using sgspec::SignedEdge;
using sgspec::SignedGraph;

/// Cycle 0-1-...-(n-1)-0; the listed edge positions (edge i joins i and i+1)
/// are negative.
inline SignedGraph cycle(int n, std::vector<int> negative_positions = {}) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < n; ++i) {
    Sign s = Sign::positive;
    for (int p : negative_positions)
      if (p == i) s = Sign::negative;
    edges.push_back({i, (i + 1) % n, s});
  }
  return SignedGraph::from_edges(n, edges);
}

inline SignedGraph negative_c6() { return cycle(6, {0}); }

inline SignedGraph complete_bipartite(int r, int s, Sign sign = Sign::positive) {
  std::vector<SignedEdge> edges;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < s; ++y) edges.push_back({x, r + y, sign});
  return SignedGraph::from_edges(r + s, edges);
}

inline SignedGraph complete(int n) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::positive});
  return SignedGraph::from_edges(n, edges);
}

inline SignedGraph path(int n, Sign sign = Sign::positive) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, sign});
  return SignedGraph::from_edges(n, edges);
}

/// Same underlying graph as g, with the listed edges (by index in g.edges())
/// made negative and all others positive.
inline SignedGraph with_negative(const SignedGraph& g, std::vector<int> indices) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::positive;
  for (int i : indices) edges[static_cast<std::size_t>(i)].sign = Sign::negative;
  return SignedGraph::from_edges(g.order(), edges);
}

}  // namespace fixtures
