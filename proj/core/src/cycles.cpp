#include "sgspec/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sgspec/error.hpp"
#include "sgspec/switching.hpp"

namespace sgspec {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.empty()) return cycle;
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

CycleWitness CycleWitness::from_vertices(const SignedGraph& g, std::vector<Vertex> cycle) {
  if (cycle.size() < 3) throw Error(ErrorCode::BadParams, "a cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::BadParams, "cycle repeats a vertex");
  }
  Sign sign = Sign::positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    auto s = g.sign(a, b);
    if (!s) {
      throw Error(ErrorCode::EdgeAbsent,
                  "cycle uses missing edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    sign = sign * *s;
  }
  return CycleWitness{canonical_cycle(std::move(cycle)), sign};
}

bool has_chord(const SignedGraph& g, const CycleWitness& c) {
  const auto& vs = c.vertices;
  const std::size_t t = vs.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 2; j < t; ++j) {
      if (i == 0 && j == t - 1) continue;
      if (g.adjacent(vs[i], vs[j])) return true;
    }
  }
  return false;
}

namespace {

// Path from x up to (and including) the common ancestor with y, then down to y.
std::vector<Vertex> tree_path(const std::vector<Vertex>& parent, const std::vector<int>& depth,
                              Vertex x, Vertex y) {
  std::vector<Vertex> up_x{x};
  std::vector<Vertex> up_y{y};
  while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
    x = parent[static_cast<std::size_t>(x)];
    up_x.push_back(x);
  }
  while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
    y = parent[static_cast<std::size_t>(y)];
    up_y.push_back(y);
  }
  while (x != y) {
    x = parent[static_cast<std::size_t>(x)];
    y = parent[static_cast<std::size_t>(y)];
    up_x.push_back(x);
    up_y.push_back(y);
  }
  up_y.pop_back();
  up_x.insert(up_x.end(), up_y.rbegin(), up_y.rend());
  return up_x;
}

std::vector<int> depths(const std::vector<Vertex>& parent, const std::vector<Vertex>& order) {
  std::vector<int> depth(parent.size(), 0);
  for (Vertex v : order) {
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
  }
  return depth;
}

}  // namespace

BipartiteCheck check_bipartite(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  BipartiteCheck out;

  for (Vertex root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] >= 0) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    const std::size_t first = order.size();
    order.push_back(root);
    for (std::size_t head = first; head < order.size(); ++head) {
      const Vertex x = order[head];
      for (const auto& nb : g.neighbors(x)) {
        auto& c = colour[static_cast<std::size_t>(nb.v)];
        if (c < 0) {
          c = 1 - colour[static_cast<std::size_t>(x)];
          parent[static_cast<std::size_t>(nb.v)] = x;
          order.push_back(nb.v);
        } else if (c == colour[static_cast<std::size_t>(x)]) {
          // Everything reachable so far is in the BFS order, so depths are valid.
          const auto depth = depths(parent, order);
          out.odd_cycle = CycleWitness::from_vertices(g, tree_path(parent, depth, x, nb.v));
          return out;
        }
      }
    }
  }

  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) {
    (colour[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
  }
  if (parts.left.size() > parts.right.size()) std::swap(parts.left, parts.right);
  out.bipartition = std::move(parts);
  return out;
}

Bipartition bipartition(const SignedGraph& g) {
  auto check = check_bipartite(g);
  if (!check.bipartition) {
    std::string cycle;
    for (Vertex v : check.odd_cycle->vertices) cycle += (cycle.empty() ? "" : "-") + std::to_string(v);
    throw Error(ErrorCode::NotBipartite, "odd cycle " + cycle);
  }
  return *std::move(check.bipartition);
}

BalanceResult is_balanced(const SignedGraph& g) {
  const SpanningForest forest = bfs_forest(g);
  const Normalized norm = forest_normalize(g);
  const auto& edges = norm.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (forest.tree[i] || edges[i].sign == Sign::positive) continue;
    std::vector<int> depth(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w = v; forest.parent[static_cast<std::size_t>(w)] >= 0;
           w = forest.parent[static_cast<std::size_t>(w)]) {
        ++depth[static_cast<std::size_t>(v)];
      }
    }
    auto cycle = tree_path(forest.parent, depth, edges[i].u, edges[i].v);
    return BalanceResult{false, CycleWitness::from_vertices(g, std::move(cycle))};
  }
  return BalanceResult{true, std::nullopt};
}

std::optional<CycleWitness> shortest_negative_cycle(const SignedGraph& g) {
  const int n = g.order();
  // State 2*v is (v, +), 2*v + 1 is (v, -).
  std::vector<int> dist(2 * static_cast<std::size_t>(n));
  std::vector<int> from(2 * static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(2 * static_cast<std::size_t>(n));

  int best_len = n + 1;
  std::vector<Vertex> best;

  for (Vertex start = 0; start < n; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    const int source = 2 * start;
    const int target = 2 * start + 1;
    dist[static_cast<std::size_t>(source)] = 0;
    from[static_cast<std::size_t>(source)] = -1;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int state = queue[head];
      const int d = dist[static_cast<std::size_t>(state)];
      if (d + 1 >= best_len) break;
      const Vertex x = state / 2;
      const int sheet = state % 2;
      for (const auto& nb : g.neighbors(x)) {
        const int next = 2 * nb.v + (nb.sign == Sign::negative ? 1 - sheet : sheet);
        if (dist[static_cast<std::size_t>(next)] >= 0) continue;
        dist[static_cast<std::size_t>(next)] = d + 1;
        from[static_cast<std::size_t>(next)] = state;
        queue.push_back(next);
      }
      if (dist[static_cast<std::size_t>(target)] >= 0) break;
    }
    const int len = dist[static_cast<std::size_t>(target)];
    if (len > 0 && len < best_len) {
      best_len = len;
      best.clear();
      for (int st = from[static_cast<std::size_t>(target)]; st >= 0; st = from[static_cast<std::size_t>(st)]) {
        best.push_back(st / 2);
      }
    }
  }

  if (best.empty()) return std::nullopt;
  // A minimum-length negative closed walk is a cycle, and it has no chord:
  // a chord would split it into two shorter cycles, one of them negative.
  auto witness = CycleWitness::from_vertices(g, std::move(best));
  if (witness.sign != Sign::negative || has_chord(g, witness)) {
    throw std::logic_error("shortest_negative_cycle: reconstructed cycle is not a chordless negative cycle");
  }
  return witness;
}

std::optional<CycleWitness> has_negative_c4(const SignedGraph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    if (nu.size() < 2) continue;
    for (Vertex w = u + 1; w < n; ++w) {
      const auto nw = g.neighbors(w);
      Vertex via_positive = -1;
      Vertex via_negative = -1;
      auto a = nu.begin();
      auto b = nw.begin();
      while (a != nu.end() && b != nw.end()) {
        if (a->v < b->v) {
          ++a;
        } else if (b->v < a->v) {
          ++b;
        } else {
          Vertex& slot = (a->sign * b->sign) == Sign::positive ? via_positive : via_negative;
          if (slot < 0) slot = a->v;
          ++a;
          ++b;
        }
      }
      if (via_positive >= 0 && via_negative >= 0) {
        return CycleWitness::from_vertices(g, {u, via_positive, w, via_negative});
      }
    }
  }
  return std::nullopt;
}

}  // namespace sgspec
