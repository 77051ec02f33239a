#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgspec/cycles.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/search.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

// Every JSON document carries "schema": 1. Doubles are printed in shortest
// round-trip form, so output bytes are deterministic.

inline constexpr int schema_version = 1;

std::string spectrum_json(const SignedGraph& g, const Spectrum& spectrum);

struct CheckReport {
  BalanceResult balance;
  std::optional<CycleWitness> negative_c4;
  std::optional<CycleWitness> shortest_negative;
  BipartiteCheck bipartite;
};

CheckReport check_graph(const SignedGraph& g);
std::string check_json(const SignedGraph& g, const CheckReport& report);

std::string bound_json(const BoundReport& report);
std::string sweep_csv(const std::vector<BoundReport>& reports);

std::string certificate_json(const Certificate& cert);
/// Header plus one row per (r, s) search in the certificate.
std::string certificate_csv(const Certificate& cert);

std::string spot_check_json(const SpotCheckReport& report);

}  // namespace sgspec
