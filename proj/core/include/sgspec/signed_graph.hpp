#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgspec {

using Vertex = int;

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign a) noexcept {
  return a == Sign::positive ? Sign::negative : Sign::positive;
}

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::positive;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  Vertex v = 0;
  Sign sign = Sign::positive;
};

/// Subset U of the vertex set, stored as a membership mask.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(int n) : member_(static_cast<std::size_t>(n), false) {}
  SwitchSet(int n, std::span<const Vertex> vertices);

  int order() const noexcept { return static_cast<int>(member_.size()); }
  bool contains(Vertex v) const { return member_.at(static_cast<std::size_t>(v)); }
  void insert(Vertex v) { member_.at(static_cast<std::size_t>(v)) = true; }
  std::vector<Vertex> vertices() const;
  bool empty() const noexcept;

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<bool> member_;
};

/// A simple graph with a +1/-1 label on every edge.
///
/// Immutable once built. Edges are stored with u < v and sorted by (u, v);
/// the adjacency index lists neighbors in increasing label order. Two graphs
/// compare equal iff they have the same order and the same signed edge list.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Validates and normalizes an edge list. Endpoints may be given in either
  /// order. Throws Error{SelfLoop, DuplicateEdge, VertexOutOfRange}.
  static SignedGraph from_edges(int n, std::span<const SignedEdge> edges);
  /// Same as from_edges but with integer signs; any value other than +1 or -1
  /// raises Error{BadSign}.
  struct RawEdge {
    Vertex u;
    Vertex v;
    int sign;
  };
  static SignedGraph from_edge_list(int n, std::span<const RawEdge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::optional<Sign> sign(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return sign(u, v).has_value(); }
  int negative_edge_count() const noexcept;

  /// Same underlying graph with every sign set to +1.
  SignedGraph underlying() const;
  bool same_underlying(const SignedGraph& other) const noexcept;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  /// Lexicographic order on (n, edge list); used for deterministic witnesses.
  friend std::strong_ordering operator<=>(const SignedGraph& a, const SignedGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                                  b.edges_.begin(), b.edges_.end());
  }

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;

  void build_adjacency();
};

/// Two partite sets with |left| <= |right|.
struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  int r() const noexcept { return static_cast<int>(left.size()); }
  int s() const noexcept { return static_cast<int>(right.size()); }
};

/// Flips every edge with exactly one endpoint in U.
SignedGraph switch_at(const SignedGraph& g, const SwitchSet& u_set);
/// Reverses every sign (the graph -g).
SignedGraph negate(const SignedGraph& g);
/// Relabels vertex v as mapping[v]. mapping must be a permutation of 0..n-1.
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> mapping);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

}  // namespace sgspec
