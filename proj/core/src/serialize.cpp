#include "sgspec/serialize.hpp"

#include <charconv>

#include <json.hpp>

#include "sgspec/sg_format.hpp"

namespace sgspec {

namespace {

using Json = nlohmann::ordered_json;

Json cycle_json(const std::optional<CycleWitness>& c) {
  if (!c) return nullptr;
  return Json{{"vertices", c->vertices}, {"sign", value(c->sign)}, {"length", c->length()}};
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Json stats_json(const EnumerationStats& st) {
  return Json{{"underlying_graphs", st.underlying_graphs},
              {"canonical_rejected", st.canonical_rejected},
              {"disconnected_skipped", st.disconnected_skipped},
              {"switching_classes", st.switching_classes},
              {"balanced", st.balanced},
              {"negative_c4", st.negative_c4},
              {"admissible", st.admissible},
              {"pruned", st.pruned()}};
}

}  // namespace

std::string spectrum_json(const SignedGraph& g, const Spectrum& spectrum) {
  Json j{{"schema", schema_version},
         {"n", g.order()},
         {"m", g.size()},
         {"eigenvalues", spectrum.eigenvalues},
         {"lambda1", spectrum.lambda1()},
         {"rho", spectrum.rho()},
         {"eigenvector", spectrum.eigenvector},
         {"residual", spectrum.residual}};
  return j.dump(2) + "\n";
}

CheckReport check_graph(const SignedGraph& g) {
  CheckReport rep;
  rep.balance = is_balanced(g);
  rep.negative_c4 = has_negative_c4(g);
  rep.shortest_negative = shortest_negative_cycle(g);
  rep.bipartite = check_bipartite(g);
  return rep;
}

std::string check_json(const SignedGraph& g, const CheckReport& rep) {
  Json bip = nullptr;
  if (rep.bipartite.bipartition) {
    const auto& b = *rep.bipartite.bipartition;
    bip = Json{{"left", b.left}, {"right", b.right}, {"r", b.r()}, {"s", b.s()}};
  }
  Json j{{"schema", schema_version},
         {"n", g.order()},
         {"m", g.size()},
         {"balanced", rep.balance.balanced},
         {"balance_witness", cycle_json(rep.balance.negative_cycle)},
         {"neg_c4", cycle_json(rep.negative_c4)},
         {"girth_neg", rep.shortest_negative ? Json(rep.shortest_negative->length()) : Json(nullptr)},
         {"shortest_negative_cycle", cycle_json(rep.shortest_negative)},
         {"bipartite", rep.bipartite.bipartition.has_value()},
         {"bipartition", bip},
         {"odd_cycle", cycle_json(rep.bipartite.odd_cycle)}};
  return j.dump(2) + "\n";
}

std::string bound_json(const BoundReport& rep) {
  Json j{{"schema", schema_version}, {"bound", rep.bound},          {"branch", to_string(rep.branch)},
         {"r", rep.r},               {"s", rep.s},                  {"n", rep.n},
         {"rho_gamma", rep.rho_gamma}, {"gap", rep.gap}};
  return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<BoundReport>& reports) {
  std::string out = "r,s,n,bound,rho_gamma,gap\n";
  for (const auto& rep : reports) {
    out += std::to_string(rep.r) + "," + std::to_string(rep.s) + "," + std::to_string(rep.n) + "," +
           shortest(rep.bound) + "," + shortest(rep.rho_gamma) + "," + shortest(rep.gap) + "\n";
  }
  return out;
}

std::string certificate_json(const Certificate& cert) {
  Json searches = Json::array();
  for (const auto& res : cert.searches) {
    Json classes = Json::array();
    for (const auto& c : res.maximizers) {
      classes.push_back(Json{{"rho", c.rho},
                             {"members", c.members},
                             {"connected", c.connected},
                             {"witness", write_sg(c.representative)}});
    }
    searches.push_back(Json{{"r", res.r},
                            {"s", res.s},
                            {"max_rho", res.max_rho},
                            {"maximizer_classes", classes},
                            {"disconnected_tie", res.disconnected_tie},
                            {"stats", stats_json(res.stats)}});
  }
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(write_sg(w));

  Json j{{"schema", schema_version},
         {"theorem", cert.theorem},
         {"r", cert.r},
         {"s", cert.s},
         {"n", cert.n},
         {"verdict", to_string(cert.verdict)},
         {"claimed_bound", cert.claimed_bound},
         {"observed_max", cert.observed_max},
         {"unique", cert.unique},
         {"matches_gamma", cert.matches_gamma},
         {"tolerance", cert.tolerance},
         {"witnesses", witnesses},
         {"searches", searches}};
  if (cert.theorem == 2) j["small_side_admissible"] = cert.small_side_admissible;
  j["notes"] = cert.notes;
  return j.dump(2) + "\n";
}

std::string certificate_csv(const Certificate& cert) {
  std::string out =
      "r,s,underlying_graphs,canonical_rejected,disconnected_skipped,switching_classes,balanced,"
      "negative_c4,admissible,pruned,max_rho,bound,maximizer_classes,disconnected_tie\n";
  for (const auto& res : cert.searches) {
    const auto& st = res.stats;
    out += std::to_string(res.r) + "," + std::to_string(res.s) + "," +
           std::to_string(st.underlying_graphs) + "," + std::to_string(st.canonical_rejected) + "," +
           std::to_string(st.disconnected_skipped) + "," + std::to_string(st.switching_classes) + "," +
           std::to_string(st.balanced) + "," + std::to_string(st.negative_c4) + "," +
           std::to_string(st.admissible) + "," + std::to_string(st.pruned()) + "," +
           shortest(res.max_rho) + "," + shortest(bound_f(ExtremalParams(res.r, res.s))) + "," +
           std::to_string(res.maximizers.size()) + "," + (res.disconnected_tie ? "true" : "false") +
           "\n";
  }
  return out;
}

std::string spot_check_json(const SpotCheckReport& rep) {
  Json j{{"schema", schema_version},
         {"r", rep.r},
         {"s", rep.s},
         {"seed", rep.seed},
         {"trials", rep.trials},
         {"draws", rep.draws},
         {"rejected_balanced", rep.rejected_balanced},
         {"rejected_negative_c4", rep.rejected_negative_c4},
         {"rejected_disconnected", rep.rejected_disconnected},
         {"violations", rep.violations},
         {"bound", rep.bound},
         {"max_rho", rep.max_rho},
         {"exhausted", rep.exhausted}};
  return j.dump(2) + "\n";
}

}  // namespace sgspec
