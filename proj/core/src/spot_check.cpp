#include <random>

#include "sgspec/cycles.hpp"
#include "sgspec/error.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/search.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

namespace {

// mt19937_64 output is fully specified by the standard; the conversions below
// avoid the implementation-defined std distributions so that a seed gives the
// same samples everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

SignedGraph draw(Sampler& rng, int r, int s) {
  const double density = 0.15 + 0.8 * rng.uniform();
  std::vector<SignedEdge> edges;
  for (int x = 0; x < r; ++x) {
    for (int y = 0; y < s; ++y) {
      if (rng.uniform() < density) edges.push_back({x, r + y, Sign::positive});
    }
  }
  if (edges.empty()) return SignedGraph::from_edges(r + s, edges);
  if (rng.uniform() < 0.5) {
    // A handful of negative edges: the regime where C4- freeness is common.
    const std::uint64_t count = 1 + rng.below(3);
    for (std::uint64_t i = 0; i < count; ++i) edges[rng.below(edges.size())].sign = Sign::negative;
  } else {
    const double q = 0.5 * rng.uniform();
    for (auto& e : edges) {
      if (rng.uniform() < q) e.sign = Sign::negative;
    }
  }
  return SignedGraph::from_edges(r + s, edges);
}

}  // namespace

SpotCheckReport spot_check_random(const SearchSpace& space, std::uint64_t trials, std::uint64_t seed) {
  if (space.r > 32 || space.s > 32) throw Error(ErrorCode::BadParams, "spot check supports sides up to 32");
  const ExtremalParams params(space.r, space.s);
  SpotCheckReport rep;
  rep.r = space.r;
  rep.s = space.s;
  rep.seed = seed;
  rep.bound = bound_f(params);
  const std::uint64_t max_draws = 10'000 * trials + 1'000;
  Sampler rng(seed);
  while (rep.trials < trials) {
    if (rep.draws == max_draws) {
      rep.exhausted = true;
      break;
    }
    ++rep.draws;
    const SignedGraph g = draw(rng, space.r, space.s);
    if (space.connected_only && !is_connected(g)) {
      ++rep.rejected_disconnected;
      continue;
    }
    if (is_balanced(g).balanced) {
      ++rep.rejected_balanced;
      continue;
    }
    if (has_negative_c4(g)) {
      ++rep.rejected_negative_c4;
      continue;
    }
    ++rep.trials;
    const double rho = spectral_radius(g);
    rep.max_rho = std::max(rep.max_rho, rho);
    if (rho > rep.bound + certificate_tolerance) ++rep.violations;
  }
  return rep;
}

}  // namespace sgspec
