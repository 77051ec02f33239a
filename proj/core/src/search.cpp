#include "sgspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "sgspec/cycles.hpp"
#include "sgspec/error.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/spectral.hpp"
#include "sgspec/switching.hpp"

namespace sgspec {

void SearchSpace::validate() const {
  if (r < 3) throw Error(ErrorCode::BadParams, "search needs r >= 3, got r = " + std::to_string(r));
  if (r > s) throw Error(ErrorCode::BadParams, "search needs r <= s");
  if (budget > hard_budget_limit) {
    throw Error(ErrorCode::BadParams,
                "budget above the supported limit of " + std::to_string(hard_budget_limit));
  }
  if (r * s > budget) {
    throw Error(ErrorCode::BudgetExceeded, "r*s = " + std::to_string(r * s) + " exceeds budget " +
                                               std::to_string(budget));
  }
}

int SearchSpace::worker_count() const noexcept {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& o) noexcept {
  underlying_graphs += o.underlying_graphs;
  canonical_rejected += o.canonical_rejected;
  disconnected_skipped += o.disconnected_skipped;
  switching_classes += o.switching_classes;
  balanced += o.balanced;
  negative_c4 += o.negative_c4;
  admissible += o.admissible;
  return *this;
}

SignedGraph AdmissibleGraph::to_graph() const {
  std::vector<SignedEdge> edges;
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < s; ++y) {
      if (((rows[static_cast<std::size_t>(x)] >> y) & 1U) == 0) continue;
      const bool neg = ((negative[static_cast<std::size_t>(x)] >> y) & 1U) != 0;
      edges.push_back({x, r + y, neg ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph::from_edges(r + s, edges);
}

double bipartite_lambda1(const AdmissibleGraph& g) {
  SymmetricMatrix gram(g.r);
  for (int a = 0; a < g.r; ++a) {
    const auto ra = static_cast<std::size_t>(a);
    gram.set(a, a, std::popcount(g.rows[ra]));
    for (int b = a + 1; b < g.r; ++b) {
      const auto rb = static_cast<std::size_t>(b);
      const std::uint32_t common = g.rows[ra] & g.rows[rb];
      const std::uint32_t flip = (g.negative[ra] ^ g.negative[rb]) & common;
      gram.set(a, b, std::popcount(common) - 2 * std::popcount(flip));
    }
  }
  const double top = eigenvalues(gram).front();
  return std::sqrt(std::max(top, 0.0));
}

namespace {

// Row x of the biadjacency mask occupies bits x*s .. x*s + s - 1.
class MaskScanner {
 public:
  MaskScanner(int r, int s, bool connected_only, bool canonical, bool exchange)
      : r_(r), s_(s), connected_only_(connected_only), canonical_(canonical),
        exchange_(exchange && r == s), column_mask_((std::uint32_t{1} << s) - 1) {
    view_.r = r;
    view_.s = s;
    view_.rows.assign(static_cast<std::size_t>(r), 0);
    view_.negative.assign(static_cast<std::size_t>(r), 0);
    permutation_.resize(static_cast<std::size_t>(r));
  }

  template <class Visit>
  void scan(std::uint64_t lo, std::uint64_t hi, EnumerationStats& stats, Visit&& visit) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) scan_one(mask, stats, visit);
  }

 private:
  int r_;
  int s_;
  bool connected_only_;
  bool canonical_;
  bool exchange_;
  std::uint32_t column_mask_;
  AdmissibleGraph view_;
  std::vector<int> permutation_;
  std::vector<int> cotree_bits_;

  std::uint32_t row(std::uint64_t mask, int x) const {
    return static_cast<std::uint32_t>(mask >> (x * s_)) & column_mask_;
  }

  // Breadth-first forest with the same root and neighbour order as
  // bfs_forest on the labeled graph (rows 0..r-1, columns r..r+s-1).
  std::uint64_t forest(int& components) const {
    const int n = r_ + s_;
    std::uint64_t tree = 0;
    std::uint64_t seen = 0;
    int queue[64];
    components = 0;
    for (int root = 0; root < n; ++root) {
      if ((seen >> root) & 1U) continue;
      ++components;
      seen |= std::uint64_t{1} << root;
      int head = 0;
      int tail = 0;
      queue[tail++] = root;
      while (head < tail) {
        const int v = queue[head++];
        if (v < r_) {
          const std::uint32_t nbrs = view_.rows[static_cast<std::size_t>(v)];
          for (int y = 0; y < s_; ++y) {
            if (!((nbrs >> y) & 1U) || ((seen >> (r_ + y)) & 1U)) continue;
            seen |= std::uint64_t{1} << (r_ + y);
            tree |= std::uint64_t{1} << (v * s_ + y);
            queue[tail++] = r_ + y;
          }
        } else {
          const int y = v - r_;
          for (int x = 0; x < r_; ++x) {
            if (!((view_.rows[static_cast<std::size_t>(x)] >> y) & 1U) || ((seen >> x) & 1U)) continue;
            seen |= std::uint64_t{1} << x;
            tree |= std::uint64_t{1} << (x * s_ + y);
            queue[tail++] = x;
          }
        }
      }
    }
    return tree;
  }

  // Columns sorted so that keys (row r-1 most significant) decrease with
  // position; this is the minimal encoding for a fixed row order.
  std::uint64_t column_sorted(const std::uint32_t* rows) const {
    std::uint32_t keys[32];
    for (int y = 0; y < s_; ++y) {
      std::uint32_t key = 0;
      for (int x = 0; x < r_; ++x) key |= ((rows[x] >> y) & 1U) << x;
      keys[y] = key;
    }
    std::sort(keys, keys + s_, std::greater<>());
    std::uint64_t out = 0;
    for (int y = 0; y < s_; ++y) {
      for (int x = 0; x < r_; ++x) {
        if ((keys[y] >> x) & 1U) out |= std::uint64_t{1} << (x * s_ + y);
      }
    }
    return out;
  }

  bool minimal_over_row_permutations(std::uint64_t mask, const std::uint32_t* rows) {
    std::iota(permutation_.begin(), permutation_.end(), 0);
    std::uint32_t permuted[32];
    do {
      for (int x = 0; x < r_; ++x) permuted[x] = rows[permutation_[static_cast<std::size_t>(x)]];
      if (column_sorted(permuted) < mask) return false;
    } while (std::next_permutation(permutation_.begin(), permutation_.end()));
    return true;
  }

  bool is_canonical(std::uint64_t mask) {
    std::uint32_t rows[32];
    for (int x = 0; x < r_; ++x) rows[x] = row(mask, x);
    if (column_sorted(rows) != mask) return false;
    if (!minimal_over_row_permutations(mask, rows)) return false;
    if (exchange_) {
      std::uint32_t transposed[32] = {};
      for (int x = 0; x < r_; ++x) {
        for (int y = 0; y < s_; ++y) {
          if ((rows[x] >> y) & 1U) transposed[y] |= std::uint32_t{1} << x;
        }
      }
      if (!minimal_over_row_permutations(mask, transposed)) return false;
    }
    return true;
  }

  bool has_negative_c4() const {
    for (int a = 0; a < r_; ++a) {
      for (int b = a + 1; b < r_; ++b) {
        const std::uint32_t common =
            view_.rows[static_cast<std::size_t>(a)] & view_.rows[static_cast<std::size_t>(b)];
        if (std::popcount(common) < 2) continue;
        const std::uint32_t flip =
            (view_.negative[static_cast<std::size_t>(a)] ^ view_.negative[static_cast<std::size_t>(b)]) &
            common;
        if (flip != 0 && flip != common) return true;
      }
    }
    return false;
  }

  template <class Visit>
  void scan_one(std::uint64_t mask, EnumerationStats& stats, Visit& visit) {
    if (canonical_ && !is_canonical(mask)) {
      ++stats.canonical_rejected;
      return;
    }
    for (int x = 0; x < r_; ++x) view_.rows[static_cast<std::size_t>(x)] = row(mask, x);
    int components = 0;
    const std::uint64_t tree = forest(components);
    if (connected_only_ && components > 1) {
      ++stats.disconnected_skipped;
      return;
    }
    const std::uint64_t cotree = mask & ~tree;
    cotree_bits_.clear();
    for (std::uint64_t rest = cotree; rest != 0; rest &= rest - 1) {
      cotree_bits_.push_back(std::countr_zero(rest));
    }
    const int k = static_cast<int>(cotree_bits_.size());
    ++stats.underlying_graphs;
    stats.switching_classes += std::uint64_t{1} << k;
    ++stats.balanced;  // the all-positive co-tree choice

    for (std::uint64_t t = 1; t < (std::uint64_t{1} << k); ++t) {
      std::uint64_t neg = 0;
      for (int i = 0; i < k; ++i) {
        if ((t >> i) & 1U) neg |= std::uint64_t{1} << cotree_bits_[static_cast<std::size_t>(i)];
      }
      for (int x = 0; x < r_; ++x) view_.negative[static_cast<std::size_t>(x)] = row(neg, x);
      if (has_negative_c4()) {
        ++stats.negative_c4;
        continue;
      }
      ++stats.admissible;
      visit(static_cast<const AdmissibleGraph&>(view_));
    }
  }
};

struct Partial {
  EnumerationStats stats;
  double max_rho = -std::numeric_limits<double>::infinity();
  std::vector<MaximizerClass> classes;
};

void drop_below_window(Partial& p) {
  std::erase_if(p.classes, [&](const MaximizerClass& c) { return c.rho < p.max_rho - maximizer_window; });
}

void absorb(Partial& p, MaximizerClass incoming) {
  for (auto& c : p.classes) {
    if (!switching_isomorphic(c.representative, incoming.representative)) continue;
    if (incoming.representative < c.representative) c.representative = std::move(incoming.representative);
    c.rho = std::max(c.rho, incoming.rho);
    c.members += incoming.members;
    return;
  }
  p.classes.push_back(std::move(incoming));
}

// Upper bound on lambda1^2: Gershgorin on the Gram matrix B B^T.
int gram_row_bound(const AdmissibleGraph& g) {
  int best = 0;
  for (int a = 0; a < g.r; ++a) {
    const auto ra = static_cast<std::size_t>(a);
    int total = std::popcount(g.rows[ra]);
    for (int b = 0; b < g.r; ++b) {
      if (b == a) continue;
      const auto rb = static_cast<std::size_t>(b);
      const std::uint32_t common = g.rows[ra] & g.rows[rb];
      const std::uint32_t flip = (g.negative[ra] ^ g.negative[rb]) & common;
      total += std::abs(std::popcount(common) - 2 * std::popcount(flip));
    }
    best = std::max(best, total);
  }
  return best;
}

void offer(Partial& p, const AdmissibleGraph& view) {
  const double threshold = p.max_rho - maximizer_window;
  if (std::sqrt(static_cast<double>(gram_row_bound(view))) < threshold - 1e-12) return;
  const double rho = bipartite_lambda1(view);
  if (rho < threshold) return;
  if (rho > p.max_rho) {
    p.max_rho = rho;
    drop_below_window(p);
  }
  SignedGraph g = view.to_graph();
  const bool connected = is_connected(g);
  absorb(p, MaximizerClass{std::move(g), rho, 1, connected});
}

void merge_into(Partial& into, Partial&& from) {
  into.stats += from.stats;
  into.max_rho = std::max(into.max_rho, from.max_rho);
  drop_below_window(into);
  drop_below_window(from);
  for (auto& c : from.classes) absorb(into, std::move(c));
}

std::uint64_t count_admissible_unchecked(int r, int s) {
  MaskScanner scanner(r, s, false, false, false);
  EnumerationStats stats;
  scanner.scan(0, std::uint64_t{1} << (r * s), stats, [](const AdmissibleGraph&) {});
  return stats.admissible;
}

}  // namespace

EnumerationStats enumerate_admissible(const SearchSpace& space,
                                      const std::function<void(const AdmissibleGraph&)>& visit) {
  space.validate();
  MaskScanner scanner(space.r, space.s, space.connected_only, space.canonical, space.exchange_sides);
  EnumerationStats stats;
  scanner.scan(0, std::uint64_t{1} << (space.r * space.s), stats, visit);
  return stats;
}

SearchResult run_search(const SearchSpace& space) {
  space.validate();
  const auto started = std::chrono::steady_clock::now();
  const int cells = space.r * space.s;
  const int chunk_bits = std::min(cells, 10);
  const std::uint64_t chunk_count = std::uint64_t{1} << chunk_bits;
  const int shift = cells - chunk_bits;

  std::vector<Partial> partials(chunk_count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    MaskScanner scanner(space.r, space.s, space.connected_only, space.canonical, space.exchange_sides);
    for (std::uint64_t c = next++; c < chunk_count; c = next++) {
      Partial& part = partials[c];
      scanner.scan(c << shift, (c + 1) << shift, part.stats,
                   [&part](const AdmissibleGraph& view) { offer(part, view); });
    }
  };
  const int workers = std::max(1, std::min<int>(space.worker_count(), static_cast<int>(chunk_count)));
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }

  Partial total;
  for (auto& part : partials) merge_into(total, std::move(part));
  std::sort(total.classes.begin(), total.classes.end(),
            [](const MaximizerClass& a, const MaximizerClass& b) { return a.representative < b.representative; });

  SearchResult result;
  result.r = space.r;
  result.s = space.s;
  result.stats = total.stats;
  result.max_rho = total.classes.empty() ? 0.0 : total.max_rho;
  result.maximizers = std::move(total.classes);
  result.disconnected_tie = std::any_of(result.maximizers.begin(), result.maximizers.end(),
                                        [](const MaximizerClass& c) { return !c.connected; });
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

Certificate verify_theorem1(int r, int s, const SearchSpace& options) {
  SearchSpace space = options;
  space.r = r;
  space.s = s;
  space.validate();

  Certificate cert;
  cert.theorem = 1;
  cert.r = r;
  cert.s = s;
  cert.n = r + s;
  cert.tolerance = certificate_tolerance;
  const ExtremalParams params(r, s);
  cert.claimed_bound = bound_f(params);

  SearchResult result = run_search(space);
  cert.observed_max = result.max_rho;
  cert.unique = result.maximizers.size() == 1;
  for (const auto& c : result.maximizers) cert.witnesses.push_back(c.representative);

  bool filters_sound = true;
  for (const auto& w : cert.witnesses) {
    if (is_balanced(w).balanced || has_negative_c4(w)) filters_sound = false;
  }
  if (cert.unique) cert.matches_gamma = switching_isomorphic(cert.witnesses.front(), build_gamma_rs(params));
  if (result.disconnected_tie) cert.notes.push_back("a disconnected graph attains the maximum");

  if (!filters_sound) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("a stored maximizer fails the admissibility filters");
  } else if (result.maximizers.empty()) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("no admissible graph found");
  } else if (cert.observed_max > cert.claimed_bound + cert.tolerance) {
    cert.verdict = Verdict::refuted;
    cert.notes.push_back("observed maximum exceeds the bound");
  } else if (cert.observed_max < cert.claimed_bound - cert.tolerance) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("observed maximum falls short of the bound");
  } else if (!cert.unique) {
    cert.verdict = Verdict::refuted;
    cert.notes.push_back("more than one maximizer class");
  } else if (!cert.matches_gamma) {
    cert.verdict = Verdict::refuted;
    cert.notes.push_back("maximizer is not switching isomorphic to the extremal construction");
  } else {
    cert.verdict = Verdict::confirmed;
  }
  cert.searches.push_back(std::move(result));
  return cert;
}

Certificate verify_theorem2(int n, const SearchSpace& options) {
  if (n < 6) throw Error(ErrorCode::BadParams, "n = " + std::to_string(n) + ": need n >= 6");
  const int top_r = n / 2;
  // Check every budget before doing any work.
  for (int r = 3; r <= top_r; ++r) {
    SearchSpace space = options;
    space.r = r;
    space.s = n - r;
    space.validate();
  }

  Certificate cert;
  cert.theorem = 2;
  cert.n = n;
  cert.r = top_r;
  cert.s = n - top_r;
  cert.tolerance = certificate_tolerance;
  cert.claimed_bound = bound_theorem2(n);

  for (int r = 1; r <= 2; ++r) {
    if (r * (n - r) <= options.budget) cert.small_side_admissible += count_admissible_unchecked(r, n - r);
  }

  bool others_below = true;
  Verdict top_verdict = Verdict::inconclusive;
  cert.observed_max = 0.0;
  for (int r = 3; r <= top_r; ++r) {
    Certificate sub = verify_theorem1(r, n - r, options);
    cert.observed_max = std::max(cert.observed_max, sub.observed_max);
    if (r == top_r) {
      top_verdict = sub.verdict;
      cert.unique = sub.unique;
      cert.matches_gamma = sub.matches_gamma;
      cert.witnesses = sub.witnesses;
    } else if (!(sub.observed_max < cert.claimed_bound - cert.tolerance)) {
      others_below = false;
      cert.notes.push_back("r = " + std::to_string(r) + " reaches the bound");
    }
    if (sub.verdict != Verdict::confirmed) {
      cert.notes.push_back("r = " + std::to_string(r) + " search: " + to_string(sub.verdict));
    }
    for (auto& note : sub.notes) cert.notes.push_back("r = " + std::to_string(r) + ": " + note);
    for (auto& res : sub.searches) cert.searches.push_back(std::move(res));
  }
  if (cert.small_side_admissible > 0) cert.notes.push_back("admissible graph with a side smaller than 3");

  const bool at_bound = std::abs(cert.observed_max - cert.claimed_bound) <= cert.tolerance;
  if (cert.observed_max > cert.claimed_bound + cert.tolerance || !others_below ||
      cert.small_side_admissible > 0) {
    cert.verdict = Verdict::refuted;
  } else if (at_bound && top_verdict == Verdict::confirmed) {
    cert.verdict = Verdict::confirmed;
  } else {
    cert.verdict = top_verdict == Verdict::refuted ? Verdict::refuted : Verdict::inconclusive;
  }
  return cert;
}

}  // namespace sgspec
