// sgtool: command-line front end for the sgspec library.
//
// Exit codes: 0 success or CONFIRMED, 1 REFUTED or INCONCLUSIVE (or spot-check
// violations), 2 parse error, 3 numeric failure, 4 bad parameters, 5 budget.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sgspec/cycles.hpp"
#include "sgspec/error.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/search.hpp"
#include "sgspec/serialize.hpp"
#include "sgspec/sg_format.hpp"
#include "sgspec/spectral.hpp"

namespace {

using namespace sgspec;

enum Exit : int { ok = 0, not_confirmed = 1, parse = 2, numeric = 3, bad_params = 4, budget = 5 };

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return parse;
    case ErrorCode::ConvergenceFailure: return numeric;
    case ErrorCode::BudgetExceeded: return budget;
    default: return bad_params;
  }
}

SignedGraph load(const std::string& path) {
  if (path == "-") return parse_sg(std::cin);
  return read_sg_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write " + out_path);
  out << text;
}

struct SearchFlags {
  bool stretch = false;
  std::optional<int> budget;
  int jobs = 0;
  bool connected_only = false;
  bool canonical = false;
  bool exchange = false;
  bool csv = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--stretch", stretch, "Raise the r*s budget to 20");
    cmd->add_option("--budget", budget, "Explicit r*s budget (at most 36)");
    cmd->add_option("-j,--jobs", jobs, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--connected-only", connected_only, "Skip disconnected underlying graphs");
    cmd->add_flag("--canonical", canonical, "Keep one labeled copy per underlying graph");
    cmd->add_flag("--exchange", exchange, "With --canonical and r = s, also identify transposes");
    cmd->add_flag("--csv", csv, "Print per-(r,s) statistics as CSV instead of JSON");
  }

  SearchSpace space() const {
    SearchSpace sp;
    sp.jobs = jobs;
    sp.connected_only = connected_only;
    sp.canonical = canonical;
    sp.exchange_sides = exchange;
    sp.budget = budget.value_or(stretch ? SearchSpace::stretch_budget : SearchSpace::default_budget);
    return sp;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Signed-graph spectral toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sgtool 0.1.0");

  std::string in_path;
  std::string out_path;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and principal eigenvector as JSON");
  spectrum->add_option("graph", in_path, "sg file ('-' for stdin)")->required();

  auto* check = app.add_subcommand("check", "Balance, negative C4, shortest negative cycle, bipartition");
  check->add_option("graph", in_path, "sg file ('-' for stdin)")->required();

  auto* matrix = app.add_subcommand("matrix", "Signed adjacency matrix, one row per line");
  matrix->add_option("graph", in_path, "sg file ('-' for stdin)")->required();

  int r = 0;
  int s = 0;
  auto* construct = app.add_subcommand("construct", "Write the extremal construction for (r, s)");
  construct->add_option("--r", r)->required();
  construct->add_option("--s", s)->required();
  construct->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::optional<int> br;
  std::optional<int> bs;
  std::optional<int> bn;
  bool value_only = false;
  auto* bound = app.add_subcommand("bound", "Closed-form bound for (r, s) or for order n");
  auto* opt_r = bound->add_option("--r", br);
  auto* opt_s = bound->add_option("--s", bs);
  auto* opt_n = bound->add_option("--n", bn);
  opt_r->needs(opt_s);
  opt_s->needs(opt_r);
  opt_n->excludes(opt_r)->excludes(opt_s);
  bound->add_flag("--value", value_only, "Print only the bound");

  int sweep_max = 8;
  auto* sweep = app.add_subcommand("sweep", "Bound and construction for all 3 <= r <= s <= max, as CSV");
  sweep->add_option("--max", sweep_max, "Largest s")->check(CLI::Range(3, 64));

  SearchFlags flags;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification; exit 0 iff CONFIRMED");
  verify->require_subcommand(1);
  auto* t1 = verify->add_subcommand("t1", "Fixed partite sizes r <= s");
  t1->add_option("r", r)->required();
  t1->add_option("s", s)->required();
  flags.attach(t1);
  int n = 0;
  auto* t2 = verify->add_subcommand("t2", "Fixed order n, all splits r + s = n");
  t2->add_option("n", n)->required();
  flags.attach(t2);

  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  bool spot_connected = false;
  auto* spot = app.add_subcommand("spot-check", "Random admissible samples checked against the bound");
  spot->add_option("--r", r)->required();
  spot->add_option("--s", s)->required();
  spot->add_option("--trials", trials);
  spot->add_option("--seed", seed);
  spot->add_flag("--connected-only", spot_connected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_params;
  }

  if (spectrum->parsed()) {
    const auto g = load(in_path);
    std::cout << spectrum_json(g, eigen_spectrum(g));
  } else if (check->parsed()) {
    const auto g = load(in_path);
    std::cout << check_json(g, check_graph(g));
  } else if (matrix->parsed()) {
    std::cout << adjacency_matrix(load(in_path)).dump();
  } else if (construct->parsed()) {
    emit(write_sg(build_gamma_rs(ExtremalParams(r, s))), out_path);
  } else if (bound->parsed()) {
    if (!bn && !br) throw Error(ErrorCode::BadParams, "bound needs --r and --s, or --n");
    const auto rep = bn ? bound_report_theorem2(*bn) : bound_report(ExtremalParams(*br, *bs));
    if (value_only) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g\n", rep.bound);
      std::cout << buf;
    } else {
      std::cout << bound_json(rep);
    }
  } else if (sweep->parsed()) {
    std::vector<BoundReport> reports;
    for (int a = 3; a <= sweep_max; ++a)
      for (int b = a; b <= sweep_max; ++b) reports.push_back(bound_report(ExtremalParams(a, b)));
    std::cout << sweep_csv(reports);
  } else if (verify->parsed()) {
    const Certificate cert = t1->parsed() ? verify_theorem1(r, s, flags.space()) : verify_theorem2(n, flags.space());
    std::cout << (flags.csv ? certificate_csv(cert) : certificate_json(cert));
    std::cerr << to_string(cert.verdict) << "\n";
    return cert.verdict == Verdict::confirmed ? ok : not_confirmed;
  } else if (spot->parsed()) {
    SearchSpace sp;
    sp.r = r;
    sp.s = s;
    sp.connected_only = spot_connected;
    const auto rep = spot_check_random(sp, trials, seed);
    std::cout << spot_check_json(rep);
    return rep.violations == 0 && !rep.exhausted ? ok : not_confirmed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sgspec::ParseError& e) {
    std::cerr << "sgtool: parse error: " << e.what() << "\n";
    return parse;
  } catch (const sgspec::Error& e) {
    std::cerr << "sgtool: " << sgspec::to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sgtool: " << e.what() << "\n";
    return bad_params;
  }
}
