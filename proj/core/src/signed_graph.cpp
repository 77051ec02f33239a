#include "sgspec/signed_graph.hpp"

#include <algorithm>
#include <string>

#include "sgspec/error.hpp"

namespace sgspec {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::UnderlyingGraphMismatch: return "UnderlyingGraphMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EdgePresent: return "EdgePresent";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

SwitchSet::SwitchSet(int n, std::span<const Vertex> vertices) : SwitchSet(n) {
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "switch set vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    }
    member_[static_cast<std::size_t>(v)] = true;
  }
}

std::vector<Vertex> SwitchSet::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

bool SwitchSet::empty() const noexcept {
  return std::none_of(member_.begin(), member_.end(), [](bool b) { return b; });
}

SignedGraph SignedGraph::from_edges(int n, std::span<const SignedEdge> edges) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  SignedGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ") outside 0.." +
                                                   std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.sign != Sign::positive && e.sign != Sign::negative) {
      throw Error(ErrorCode::BadSign, "edge sign must be +1 or -1");
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(g.edges_[i].u) +
                                                "," + std::to_string(g.edges_[i].v) + ")");
    }
  }
  g.build_adjacency();
  return g;
}

SignedGraph SignedGraph::from_edge_list(int n, std::span<const RawEdge> edges) {
  std::vector<SignedEdge> typed;
  typed.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.sign != 1 && e.sign != -1) {
      throw Error(ErrorCode::BadSign, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          ") has sign " + std::to_string(e.sign));
    }
    typed.push_back({e.u, e.v, e.sign == 1 ? Sign::positive : Sign::negative});
  }
  return from_edges(n, typed);
}

void SignedGraph::build_adjacency() {
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
  }
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[static_cast<std::size_t>(v)];
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.v < x; });
  if (it != list.end() && it->v == v) return it->sign;
  return std::nullopt;
}

int SignedGraph::negative_edge_count() const noexcept {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const SignedEdge& e) { return e.sign == Sign::negative; }));
}

SignedGraph SignedGraph::underlying() const {
  SignedGraph g = *this;
  for (auto& e : g.edges_) e.sign = Sign::positive;
  g.build_adjacency();
  return g;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const noexcept {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

SignedGraph switch_at(const SignedGraph& g, const SwitchSet& u_set) {
  if (u_set.order() != g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "switch set built for " +
                                                 std::to_string(u_set.order()) +
                                                 " vertices, graph has " +
                                                 std::to_string(g.order()));
  }
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) {
    if (u_set.contains(e.u) != u_set.contains(e.v)) e.sign = -e.sign;
  }
  return SignedGraph::from_edges(g.order(), edges);
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = -e.sign;
  return SignedGraph::from_edges(g.order(), edges);
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> mapping) {
  if (static_cast<int>(mapping.size()) != g.order()) {
    throw Error(ErrorCode::BadParams, "relabel mapping has wrong length");
  }
  std::vector<bool> seen(mapping.size(), false);
  for (Vertex v : mapping) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::BadParams, "relabel mapping is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    edges.push_back({mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)], e.sign});
  }
  return SignedGraph::from_edges(g.order(), edges);
}

std::vector<std::vector<Vertex>> components(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{root};
    comp[static_cast<std::size_t>(root)] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& nb : g.neighbors(members[head])) {
        if (comp[static_cast<std::size_t>(nb.v)] < 0) {
          comp[static_cast<std::size_t>(nb.v)] = id;
          members.push_back(nb.v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

}  // namespace sgspec
