#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgspec/signed_graph.hpp"

namespace sgspec {

/// A cycle v1 v2 ... vt v1 together with the product of its edge signs.
///
/// Witnesses produced by this library are canonical: the smallest vertex comes
/// first and the direction is chosen so that the second vertex is smaller than
/// the last one.
struct CycleWitness {
  std::vector<Vertex> vertices;
  Sign sign = Sign::positive;

  int length() const noexcept { return static_cast<int>(vertices.size()); }

  /// Checks adjacency of consecutive vertices (and the closing pair),
  /// distinctness and t >= 3, then computes the sign and canonicalizes.
  /// Throws Error{EdgeAbsent} or Error{BadParams}.
  static CycleWitness from_vertices(const SignedGraph& g, std::vector<Vertex> cycle);

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Rotates and orients a vertex cycle into canonical form.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

/// True iff some pair of non-consecutive cycle vertices is adjacent.
bool has_chord(const SignedGraph& g, const CycleWitness& c);

struct BipartiteCheck {
  std::optional<Bipartition> bipartition;
  std::optional<CycleWitness> odd_cycle;  // cycle of the underlying graph
};

/// Two-colours each component from its smallest vertex. If the colour
/// classes come out with |left| > |right| they are swapped.
BipartiteCheck check_bipartite(const SignedGraph& g);
/// As check_bipartite, throwing Error{NotBipartite} on an odd cycle.
Bipartition bipartition(const SignedGraph& g);

struct BalanceResult {
  bool balanced = true;
  std::optional<CycleWitness> negative_cycle;
};

/// Balanced iff every cycle is positive. When unbalanced, the witness is a
/// fundamental cycle of the normalizing forest, which is negative.
BalanceResult is_balanced(const SignedGraph& g);

/// Minimum-length negative cycle via breadth-first search in the signed double
/// cover, or nullopt when g is balanced. The result is always chordless.
std::optional<CycleWitness> shortest_negative_cycle(const SignedGraph& g);

/// A 4-cycle with negative sign, or nullopt. For every pair {u, w} the
/// products sign(uv)sign(vw) over common neighbours v are compared; both
/// signs occurring means a negative 4-cycle u v w v'.
std::optional<CycleWitness> has_negative_c4(const SignedGraph& g);

}  // namespace sgspec
