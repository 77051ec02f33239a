#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgspec/partition.hpp"
#include "sgspec/signed_graph.hpp"

namespace sgspec {

/// Partite sizes 3 <= r <= s of the extremal family.
class ExtremalParams {
 public:
  /// Throws Error{BadParams} unless 3 <= r <= s.
  ExtremalParams(int r, int s);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  int n() const noexcept { return r_ + s_; }
  /// Edge count of the construction, (r-1)(s-1) + 2.
  int m() const noexcept { return (r_ - 1) * (s_ - 1) + 2; }

 private:
  int r_;
  int s_;
};

/// Layout of the construction, fixed so that output bytes are stable:
///   0 .. r-2          the (r-1)-side of K_{r-1,s-1}, u = 0
///   r-1 .. r+s-3      the (s-1)-side, v = r-1
///   r+s-2             v1 (adjacent to u and u1)
///   r+s-1             u1 (adjacent to v1 by the only negative edge, and to v)
struct GammaLayout {
  Vertex u;
  Vertex v;
  Vertex v1;
  Vertex u1;
};

GammaLayout gamma_layout(const ExtremalParams& p);

/// K_{r-1,s-1} minus the edge uv, plus the path u v1 u1 v whose middle edge is
/// the only negative edge.
SignedGraph build_gamma_rs(const ExtremalParams& p);
Bipartition gamma_bipartition(const ExtremalParams& p);

/// {u1}, {u}, V1 \ {u}, {v1}, {v}, V2 \ {v}, in that order.
VertexPartition gamma_partition(const ExtremalParams& p);

/// Largest root of x^4 - ((r-1)(s-1)+2) x^2 + (2r-3)(2s-3), i.e. the maximum
/// spectral radius over the admissible class.
double bound_f(const ExtremalParams& p);
/// Same polynomial, second-largest positive root (minus inside the square root).
double bound_f_minus(const ExtremalParams& p);

/// Closed form in the order n >= 6. Throws Error{BadParams} for n < 6.
double bound_theorem2(int n);

/// Integer polynomial, coefficients by ascending degree.
struct Polynomial {
  std::vector<std::int64_t> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  double evaluate(double x) const noexcept;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// x^2 (x^4 - ((r-1)(s-1)+2) x^2 + (2r-3)(2s-3)), the characteristic
/// polynomial of the quotient over gamma_partition.
Polynomial char_poly_quotient(const ExtremalParams& p);

struct BoundReport {
  enum class Branch { rs_form, even_n, odd_n };

  double bound = 0.0;
  Branch branch = Branch::rs_form;
  int r = 0;
  int s = 0;
  int n = 0;
  double rho_gamma = 0.0;  // spectral radius of the construction
  double gap = 0.0;        // bound - rho_gamma
};

const char* to_string(BoundReport::Branch b) noexcept;

BoundReport bound_report(const ExtremalParams& p);
/// Uses the n-form; the construction is at (floor(n/2), ceil(n/2)).
BoundReport bound_report_theorem2(int n);

struct SpectrumStructureReport {
  int r = 0;
  int s = 0;
  std::vector<double> eigenvalues;
  std::vector<double> expected_nonzero;  // f, f-, -f-, -f
  int zero_multiplicity = 0;
  double square_sum = 0.0;
  int two_m = 0;
  bool partition_equitable = false;
  bool quotient_contained = false;
  std::vector<std::string> violations;  // empty when every clause holds

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the full spectrum of the construction: four nonzero eigenvalues
/// +-f, +-f- (within tol), zero with multiplicity n - 4, sum of squares 2m,
/// and the six-block partition equitable with contained quotient spectrum.
SpectrumStructureReport verify_spectrum_structure(const ExtremalParams& p, double tol = 1e-8);

/// f(r, n-r) strictly increasing over r_lo..r_hi with margin > 1e-12.
/// Throws Error{BadParams} unless 3 <= r_lo <= r_hi <= floor(n/2).
bool monotone_in_r(int n, int r_lo, int r_hi);

/// f(r,s) > sqrt((r-1)(s-2)) with margin > 1e-12. Requires s >= 4.
bool lower_bound_check(const ExtremalParams& p);

}  // namespace sgspec
