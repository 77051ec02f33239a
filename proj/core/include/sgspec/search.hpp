#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sgspec/signed_graph.hpp"

namespace sgspec {

/// Parameters of an exhaustive search over signed r x s bipartite graphs.
struct SearchSpace {
  static constexpr int default_budget = 16;
  static constexpr int stretch_budget = 20;
  static constexpr int hard_budget_limit = 36;

  int r = 3;
  int s = 3;
  bool connected_only = false;
  /// Keep only underlying graphs whose biadjacency mask is minimal under
  /// row/column permutations.
  bool canonical = false;
  /// With canonical and r == s, transposes are also considered.
  bool exchange_sides = false;
  int jobs = 0;  // 0: std::thread::hardware_concurrency()
  int budget = default_budget;  // max r*s

  /// Throws Error{BadParams} unless 3 <= r <= s, Error{BudgetExceeded} when
  /// r*s > budget.
  void validate() const;
  int worker_count() const noexcept;
};

struct EnumerationStats {
  std::uint64_t underlying_graphs = 0;  // edge subsets passing the graph filters
  std::uint64_t canonical_rejected = 0;
  std::uint64_t disconnected_skipped = 0;
  std::uint64_t switching_classes = 0;  // sum of 2^(m-n+c)
  std::uint64_t balanced = 0;           // one per underlying graph
  std::uint64_t negative_c4 = 0;
  std::uint64_t admissible = 0;

  std::uint64_t pruned() const noexcept { return balanced + negative_c4; }
  EnumerationStats& operator+=(const EnumerationStats& o) noexcept;
  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

/// A forest-normalized signed bipartite graph on X = {0..r-1},
/// Y = {r..r+s-1}, stored as biadjacency row masks.
struct AdmissibleGraph {
  int r = 0;
  int s = 0;
  std::vector<std::uint32_t> rows;      // bit y: x ~ r+y
  std::vector<std::uint32_t> negative;  // subset of rows

  SignedGraph to_graph() const;
};

/// Visits every (underlying graph, switching class) pair whose class is
/// unbalanced and free of negative 4-cycles, exactly once, sequentially.
/// Throws as SearchSpace::validate.
EnumerationStats enumerate_admissible(const SearchSpace& space,
                                      const std::function<void(const AdmissibleGraph&)>& visit);

/// Largest eigenvalue of A for a bipartite graph given by masks, computed as
/// the square root of the top eigenvalue of the r x r Gram matrix B B^T.
double bipartite_lambda1(const AdmissibleGraph& g);

struct MaximizerClass {
  SignedGraph representative;  // lexicographically smallest member seen
  double rho = 0.0;            // largest value over members
  std::uint64_t members = 0;   // labeled forest-normalized members encountered
  bool connected = true;
};

struct SearchResult {
  int r = 0;
  int s = 0;
  double max_rho = 0.0;
  /// Switching-isomorphism classes with rho >= max_rho - 1e-9, sorted by
  /// representative.
  std::vector<MaximizerClass> maximizers;
  EnumerationStats stats;
  bool disconnected_tie = false;
  double wall_seconds = 0.0;
};

constexpr double maximizer_window = 1e-9;

/// Parallel exhaustive search. Work is split into chunks of consecutive
/// edge masks; partial results are merged in chunk order, so the result
/// (apart from wall_seconds) does not depend on the worker count.
SearchResult run_search(const SearchSpace& space);

enum class Verdict { confirmed, refuted, inconclusive };
const char* to_string(Verdict v) noexcept;

struct Certificate {
  int theorem = 1;  // 1: fixed (r, s); 2: fixed order n
  int r = 0;
  int s = 0;
  int n = 0;
  Verdict verdict = Verdict::inconclusive;
  double claimed_bound = 0.0;
  double observed_max = 0.0;
  bool unique = false;
  bool matches_gamma = false;
  std::vector<SignedGraph> witnesses;
  double tolerance = 1e-8;
  std::vector<SearchResult> searches;
  /// Admissible classes found for the partite sizes 1 and 2 (order form only).
  std::uint64_t small_side_admissible = 0;
  std::vector<std::string> notes;
};

constexpr double certificate_tolerance = 1e-8;

/// CONFIRMED iff the maximum equals bound_f(r,s) within 1e-8 and the unique
/// maximizer class is switching isomorphic to the extremal construction.
/// REFUTED when the bound is exceeded or uniqueness fails; INCONCLUSIVE when
/// the maximum falls short of the bound. Uses the flags of `options`; its
/// r and s are replaced.
Certificate verify_theorem1(int r, int s, const SearchSpace& options = {});

/// Runs verify_theorem1 for 3 <= r <= n/2, s = n - r, and requires the global
/// maximum to equal bound_theorem2(n), attained only at r = floor(n/2).
/// Throws Error{BadParams} for n < 6.
Certificate verify_theorem2(int n, const SearchSpace& options = {});

struct SpotCheckReport {
  int r = 0;
  int s = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t draws = 0;
  std::uint64_t rejected_balanced = 0;
  std::uint64_t rejected_negative_c4 = 0;
  std::uint64_t rejected_disconnected = 0;
  std::uint64_t violations = 0;
  double bound = 0.0;
  double max_rho = 0.0;
  bool exhausted = false;  // draw cap hit before `trials` admissible samples
};

/// Samples random admissible r x s graphs (rejection sampling, no budget)
/// and counts those with rho > bound_f(r,s) + 1e-8.
SpotCheckReport spot_check_random(const SearchSpace& space, std::uint64_t trials,
                                  std::uint64_t seed);

}  // namespace sgspec
