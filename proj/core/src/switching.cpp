#include "sgspec/switching.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "sgspec/error.hpp"

namespace sgspec {

namespace {

std::size_t edge_index(const SignedGraph& g, Vertex a, Vertex b) {
  const SignedEdge key{std::min(a, b), std::max(a, b), Sign::negative};
  const auto& edges = g.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), key,
                             [](const SignedEdge& x, const SignedEdge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  return static_cast<std::size_t>(it - edges.begin());
}

}  // namespace

int SpanningForest::cotree_size() const noexcept {
  return static_cast<int>(std::count(tree.begin(), tree.end(), false));
}

SpanningForest bfs_forest(const SignedGraph& g) {
  const int n = g.order();
  SpanningForest f;
  f.tree.assign(g.edges().size(), false);
  f.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++f.component_count;
    seen[static_cast<std::size_t>(root)] = true;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const auto& nb : g.neighbors(x)) {
        if (seen[static_cast<std::size_t>(nb.v)]) continue;
        seen[static_cast<std::size_t>(nb.v)] = true;
        f.parent[static_cast<std::size_t>(nb.v)] = x;
        f.tree[edge_index(g, x, nb.v)] = true;
        queue.push_back(nb.v);
      }
    }
  }
  return f;
}

Normalized forest_normalize(const SignedGraph& g) {
  const int n = g.order();
  const SpanningForest f = bfs_forest(g);
  // Resolve switch values parent-first: walk each vertex up to a resolved
  // ancestor, then assign on the way back down.
  std::vector<int> tau(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> chain;
  for (Vertex v = 0; v < n; ++v) {
    chain.clear();
    Vertex w = v;
    while (tau[static_cast<std::size_t>(w)] == 0 && f.parent[static_cast<std::size_t>(w)] >= 0) {
      chain.push_back(w);
      w = f.parent[static_cast<std::size_t>(w)];
    }
    if (tau[static_cast<std::size_t>(w)] == 0) tau[static_cast<std::size_t>(w)] = 1;  // root
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Vertex child = *it;
      const Vertex p = f.parent[static_cast<std::size_t>(child)];
      tau[static_cast<std::size_t>(child)] = tau[static_cast<std::size_t>(p)] * value(*g.sign(p, child));
    }
  }
  SwitchSet u_set(n);
  for (Vertex v = 0; v < n; ++v) {
    if (tau[static_cast<std::size_t>(v)] < 0) u_set.insert(v);
  }
  return Normalized{switch_at(g, u_set), std::move(u_set)};
}

std::vector<Sign> cotree_signs(const SignedGraph& g) {
  const SpanningForest f = bfs_forest(g);
  const SignedGraph norm = forest_normalize(g).graph;
  std::vector<Sign> out;
  for (std::size_t i = 0; i < norm.edges().size(); ++i) {
    if (!f.tree[i]) out.push_back(norm.edges()[i].sign);
  }
  return out;
}

bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) {
    throw Error(ErrorCode::UnderlyingGraphMismatch,
                "switching equivalence needs a common labeled underlying graph");
  }
  return cotree_signs(g1) == cotree_signs(g2);
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SignedGraph& g1, const SignedGraph& g2)
      : g1_(g1), g2_(g2), n_(g1.order()) {
    order_ = bfs_order(g1_);
    invariant1_ = invariants(g1_);
    invariant2_ = invariants(g2_);
    map_.assign(static_cast<std::size_t>(n_), -1);
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    tau_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<SwitchingIsomorphism> run() {
    if (!extend(0)) return std::nullopt;
    SwitchingIsomorphism iso;
    iso.mapping = map_;
    iso.switch_set = SwitchSet(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (tau_[static_cast<std::size_t>(v)] < 0) iso.switch_set.insert(v);
    }
    return iso;
  }

 private:
  const SignedGraph& g1_;
  const SignedGraph& g2_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<std::vector<int>> invariant1_;
  std::vector<std::vector<int>> invariant2_;
  std::vector<Vertex> map_;
  std::vector<Vertex> inverse_;
  std::vector<int> tau_;

  static std::vector<Vertex> bfs_order(const SignedGraph& g) {
    std::vector<Vertex> order;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen[static_cast<std::size_t>(root)]) continue;
      seen[static_cast<std::size_t>(root)] = true;
      const std::size_t first = order.size();
      order.push_back(root);
      for (std::size_t head = first; head < order.size(); ++head) {
        for (const auto& nb : g.neighbors(order[head])) {
          if (!seen[static_cast<std::size_t>(nb.v)]) {
            seen[static_cast<std::size_t>(nb.v)] = true;
            order.push_back(nb.v);
          }
        }
      }
    }
    return order;
  }

  // Degree followed by the sorted degrees of the neighbours.
  static std::vector<std::vector<int>> invariants(const SignedGraph& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& inv = out[static_cast<std::size_t>(v)];
      inv.push_back(g.degree(v));
      for (const auto& nb : g.neighbors(v)) inv.push_back(g.degree(nb.v));
      std::sort(inv.begin() + 1, inv.end());
    }
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex a = order_[depth];
    for (Vertex b = 0; b < n_; ++b) {
      if (inverse_[static_cast<std::size_t>(b)] >= 0) continue;
      if (invariant1_[static_cast<std::size_t>(a)] != invariant2_[static_cast<std::size_t>(b)]) continue;
      if (!assign(a, b)) continue;
      if (extend(depth + 1)) return true;
      map_[static_cast<std::size_t>(a)] = -1;
      inverse_[static_cast<std::size_t>(b)] = -1;
      tau_[static_cast<std::size_t>(a)] = 0;
    }
    return false;
  }

  bool assign(Vertex a, Vertex b) {
    int tau = 0;
    int mapped_neighbors = 0;
    for (const auto& nb : g1_.neighbors(a)) {
      const Vertex image = map_[static_cast<std::size_t>(nb.v)];
      if (image < 0) continue;
      ++mapped_neighbors;
      const auto target = g2_.sign(b, image);
      if (!target) return false;
      const int needed = value(*target) * value(nb.sign) * tau_[static_cast<std::size_t>(nb.v)];
      if (tau == 0) {
        tau = needed;
      } else if (tau != needed) {
        return false;
      }
    }
    int image_neighbors = 0;
    for (const auto& nb : g2_.neighbors(b)) {
      if (inverse_[static_cast<std::size_t>(nb.v)] >= 0) ++image_neighbors;
    }
    if (image_neighbors != mapped_neighbors) return false;
    map_[static_cast<std::size_t>(a)] = b;
    inverse_[static_cast<std::size_t>(b)] = a;
    tau_[static_cast<std::size_t>(a)] = tau == 0 ? 1 : tau;
    return true;
  }
};

}  // namespace

std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedGraph& g1,
                                                               const SignedGraph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  std::vector<int> d1;
  std::vector<int> d2;
  for (Vertex v = 0; v < g1.order(); ++v) {
    d1.push_back(g1.degree(v));
    d2.push_back(g2.degree(v));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  return IsomorphismSearch(g1, g2).run();
}

void for_each_switching_class(const SignedGraph& g,
                              const std::function<void(const SignedGraph&)>& visit) {
  const SpanningForest f = bfs_forest(g);
  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < f.tree.size(); ++i) {
    if (!f.tree[i]) cotree.push_back(i);
  }
  if (cotree.size() > 30) {
    throw Error(ErrorCode::BudgetExceeded,
                "co-tree has " + std::to_string(cotree.size()) + " edges; at most 30 supported");
  }
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::positive;
  const std::uint64_t classes = std::uint64_t{1} << cotree.size();
  for (std::uint64_t mask = 0; mask < classes; ++mask) {
    for (std::size_t k = 0; k < cotree.size(); ++k) {
      edges[cotree[k]].sign = ((mask >> k) & 1U) != 0 ? Sign::negative : Sign::positive;
    }
    visit(SignedGraph::from_edges(g.order(), edges));
  }
}

std::uint64_t switching_class_count(const SignedGraph& g) {
  const int k = bfs_forest(g).cotree_size();
  if (k >= 64) throw Error(ErrorCode::BudgetExceeded, "switching class count overflows 64 bits");
  return std::uint64_t{1} << k;
}

}  // namespace sgspec
