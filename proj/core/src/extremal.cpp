#include "sgspec/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sgspec/error.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

ExtremalParams::ExtremalParams(int r, int s) : r_(r), s_(s) {
  if (r < 3) {
    throw Error(ErrorCode::BadParams, "r = " + std::to_string(r) + ": the smaller side needs r >= 3");
  }
  if (r > s) {
    throw Error(ErrorCode::BadParams,
                "r = " + std::to_string(r) + " > s = " + std::to_string(s) + ": need r <= s");
  }
}

GammaLayout gamma_layout(const ExtremalParams& p) {
  return GammaLayout{0, p.r() - 1, p.n() - 2, p.n() - 1};
}

SignedGraph build_gamma_rs(const ExtremalParams& p) {
  const GammaLayout at = gamma_layout(p);
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(p.m()));
  for (Vertex a = 0; a <= p.r() - 2; ++a) {
    for (Vertex b = p.r() - 1; b <= p.n() - 3; ++b) {
      if (a == at.u && b == at.v) continue;
      edges.push_back({a, b, Sign::positive});
    }
  }
  edges.push_back({at.u, at.v1, Sign::positive});
  edges.push_back({at.v1, at.u1, Sign::negative});
  edges.push_back({at.v, at.u1, Sign::positive});
  return SignedGraph::from_edges(p.n(), edges);
}

Bipartition gamma_bipartition(const ExtremalParams& p) {
  const GammaLayout at = gamma_layout(p);
  Bipartition parts;
  for (Vertex a = 0; a <= p.r() - 2; ++a) parts.left.push_back(a);
  parts.left.push_back(at.u1);
  for (Vertex b = p.r() - 1; b <= p.n() - 3; ++b) parts.right.push_back(b);
  parts.right.push_back(at.v1);
  return parts;
}

VertexPartition gamma_partition(const ExtremalParams& p) {
  const GammaLayout at = gamma_layout(p);
  std::vector<Vertex> rest1;
  for (Vertex a = 1; a <= p.r() - 2; ++a) rest1.push_back(a);
  std::vector<Vertex> rest2;
  for (Vertex b = p.r(); b <= p.n() - 3; ++b) rest2.push_back(b);
  return VertexPartition(p.n(), {{at.u1}, {at.u}, rest1, {at.v1}, {at.v}, rest2});
}

namespace {

struct QuarticTerms {
  std::int64_t linear;        // (r-1)(s-1) + 2
  std::int64_t constant;      // (2r-3)(2s-3)
  std::int64_t discriminant;  // linear^2 - 4 constant
};

QuarticTerms quartic_terms(const ExtremalParams& p) {
  const std::int64_t a = std::int64_t{p.r() - 1} * (p.s() - 1) + 2;
  const std::int64_t b = std::int64_t{2 * p.r() - 3} * (2 * p.s() - 3);
  const std::int64_t disc = a * a - 4 * b;
  if (disc < 0) throw std::logic_error("negative discriminant in the quartic");
  return {a, b, disc};
}

}  // namespace

double bound_f(const ExtremalParams& p) {
  const auto q = quartic_terms(p);
  return std::sqrt(0.5 * (static_cast<double>(q.linear) + std::sqrt(static_cast<double>(q.discriminant))));
}

double bound_f_minus(const ExtremalParams& p) {
  const auto q = quartic_terms(p);
  const double inner =
      0.5 * (static_cast<double>(q.linear) - std::sqrt(static_cast<double>(q.discriminant)));
  return std::sqrt(std::max(inner, 0.0));
}

double bound_theorem2(int n) {
  if (n < 6) throw Error(ErrorCode::BadParams, "n = " + std::to_string(n) + ": need n >= 6");
  const auto nn = static_cast<std::int64_t>(n);
  if (n % 2 == 0) {
    return 0.25 * (static_cast<double>(nn - 6) + std::sqrt(static_cast<double>((nn - 2) * (nn + 6))));
  }
  const std::int64_t a = nn * nn - 4 * nn + 11;
  const std::int64_t disc = a * a - 64 * (nn - 2) * (nn - 4);
  return std::sqrt(0.125 * (static_cast<double>(a) + std::sqrt(static_cast<double>(disc))));
}

double Polynomial::evaluate(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

Polynomial char_poly_quotient(const ExtremalParams& p) {
  const auto q = quartic_terms(p);
  return Polynomial{{0, 0, q.constant, 0, -q.linear, 0, 1}};
}

const char* to_string(BoundReport::Branch b) noexcept {
  switch (b) {
    case BoundReport::Branch::rs_form: return "rs-form";
    case BoundReport::Branch::even_n: return "even-n";
    case BoundReport::Branch::odd_n: return "odd-n";
  }
  return "unknown";
}

BoundReport bound_report(const ExtremalParams& p) {
  BoundReport rep;
  rep.bound = bound_f(p);
  rep.branch = BoundReport::Branch::rs_form;
  rep.r = p.r();
  rep.s = p.s();
  rep.n = p.n();
  rep.rho_gamma = spectral_radius(build_gamma_rs(p));
  rep.gap = rep.bound - rep.rho_gamma;
  return rep;
}

BoundReport bound_report_theorem2(int n) {
  BoundReport rep;
  rep.bound = bound_theorem2(n);
  rep.branch = n % 2 == 0 ? BoundReport::Branch::even_n : BoundReport::Branch::odd_n;
  rep.r = n / 2;
  rep.s = n - n / 2;
  rep.n = n;
  rep.rho_gamma = spectral_radius(build_gamma_rs(ExtremalParams(rep.r, rep.s)));
  rep.gap = rep.bound - rep.rho_gamma;
  return rep;
}

SpectrumStructureReport verify_spectrum_structure(const ExtremalParams& p, double tol) {
  SpectrumStructureReport rep;
  rep.r = p.r();
  rep.s = p.s();
  const SignedGraph gamma = build_gamma_rs(p);
  const SymmetricMatrix a = adjacency_matrix(gamma);
  rep.eigenvalues = eigenvalues(a);
  const double f = bound_f(p);
  const double fm = bound_f_minus(p);
  rep.expected_nonzero = {f, fm, -fm, -f};
  rep.two_m = 2 * gamma.size();

  const auto& ev = rep.eigenvalues;
  const std::size_t n = ev.size();
  if (n != static_cast<std::size_t>(p.n())) rep.violations.push_back("eigenvalue count differs from n");
  if (std::abs(ev[0] - f) > tol || std::abs(ev[1] - fm) > tol || std::abs(ev[n - 2] + fm) > tol ||
      std::abs(ev[n - 1] + f) > tol) {
    rep.violations.push_back("nonzero eigenvalues differ from +-f, +-f-");
  }
  for (double x : ev) {
    if (std::abs(x) <= tol) ++rep.zero_multiplicity;
  }
  if (rep.zero_multiplicity != p.n() - 4) rep.violations.push_back("zero multiplicity is not n - 4");
  for (double x : ev) rep.square_sum += x * x;
  if (std::abs(rep.square_sum - rep.two_m) > tol) {
    rep.violations.push_back("sum of squared eigenvalues differs from 2m");
  }

  const VertexPartition part = gamma_partition(p);
  rep.partition_equitable = quotient_matrix(a, part).equitable;
  if (!rep.partition_equitable) {
    rep.violations.push_back("six-block partition is not equitable");
  } else {
    rep.quotient_contained = quotient_spectrum_contained(a, part, 1e-7);
    if (!rep.quotient_contained) rep.violations.push_back("quotient spectrum not contained");
  }
  return rep;
}

bool monotone_in_r(int n, int r_lo, int r_hi) {
  if (r_lo < 3 || r_lo > r_hi || r_hi > n / 2) {
    throw Error(ErrorCode::BadParams, "need 3 <= r_lo <= r_hi <= n/2");
  }
  double previous = bound_f(ExtremalParams(r_lo, n - r_lo));
  for (int r = r_lo + 1; r <= r_hi; ++r) {
    const double current = bound_f(ExtremalParams(r, n - r));
    if (!(current - previous > 1e-12)) return false;
    previous = current;
  }
  return true;
}

bool lower_bound_check(const ExtremalParams& p) {
  if (p.s() < 4) throw Error(ErrorCode::BadParams, "lower bound needs s >= 4");
  const double floor_value = std::sqrt(static_cast<double>((p.r() - 1) * (p.s() - 2)));
  return bound_f(p) - floor_value > 1e-12;
}

}  // namespace sgspec
