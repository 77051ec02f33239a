#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgspec/signed_graph.hpp"

namespace sgspec {

/// Breadth-first spanning forest, rooted at the smallest vertex of each
/// component, neighbours visited in increasing order. tree[i] is true when
/// g.edges()[i] is a forest edge.
struct SpanningForest {
  std::vector<bool> tree;
  std::vector<Vertex> parent;  // -1 for roots
  int component_count = 0;

  int cotree_size() const noexcept;
};

SpanningForest bfs_forest(const SignedGraph& g);

struct Normalized {
  SignedGraph graph;
  SwitchSet switch_set;
};

/// Switches g so that every edge of bfs_forest(g) is positive. The result is
/// the unique such representative of g's switching class.
Normalized forest_normalize(const SignedGraph& g);

/// Signs of the co-tree edges after forest normalization, in edge-list order.
/// Encodes the cycle-sign class of g.
std::vector<Sign> cotree_signs(const SignedGraph& g);

/// Throws Error{UnderlyingGraphMismatch} unless g1 and g2 share a labeled
/// underlying graph.
bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// Certificate for switching isomorphism: relabel(switch_at(g1, switch_set),
/// mapping) == g2.
struct SwitchingIsomorphism {
  std::vector<Vertex> mapping;
  SwitchSet switch_set;
};

/// Backtracking search over bijections of the underlying graphs. Switch values
/// are propagated along a breadth-first order of g1, so a partial map is
/// rejected as soon as one mapped edge disagrees in sign.
std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedGraph& g1,
                                                               const SignedGraph& g2);

inline bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
  return find_switching_isomorphism(g1, g2).has_value();
}

/// Visits one forest-normalized representative per switching class of the
/// underlying graph of g: 2^(m - n + c) graphs, in increasing order of the
/// co-tree negative-edge bitmask (bit i = i-th co-tree edge in edge-list
/// order). The first visit is always the all-positive signature.
/// Throws Error{BudgetExceeded} when the co-tree has more than 30 edges.
void for_each_switching_class(const SignedGraph& g,
                              const std::function<void(const SignedGraph&)>& visit);

std::uint64_t switching_class_count(const SignedGraph& g);

}  // namespace sgspec
