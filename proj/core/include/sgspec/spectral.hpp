#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgspec/signed_graph.hpp"

namespace sgspec {

/// Dense real symmetric matrix, full row-major storage. set() writes both
/// triangles, so the symmetry invariant holds by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }
  void set(int i, int j, double x) noexcept {
    data_[index(i, j)] = x;
    data_[index(j, i)] = x;
  }

  std::vector<double> multiply(std::span<const double> x) const;

  /// n rows of n space-separated entries (integers printed without decimals).
  std::string dump() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;

  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
};

SymmetricMatrix adjacency_matrix(const SignedGraph& g);

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  std::vector<double> eigenvector;  // unit vector for eigenvalues.front()
  double residual = 0.0;            // ||(A - lambda1 I) x||

  double lambda1() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double rho() const;
};

/// Eigenvalues only, descending. Householder tridiagonalization followed by
/// implicit QL with Wilkinson shifts; at most 64 iterations per eigenvalue.
/// Throws Error{ConvergenceFailure}.
std::vector<double> eigenvalues(const SymmetricMatrix& a);

/// Full spectrum plus a unit eigenvector for lambda1, taken from the
/// accumulated QL transformations. When lambda1 is multiple the vector is
/// some unit vector of the eigenspace. Orientation: positive entry sum, or
/// (sum zero) first nonzero entry positive.
Spectrum eigen_spectrum(const SymmetricMatrix& a);
Spectrum eigen_spectrum(const SignedGraph& g);

double spectral_radius(const SignedGraph& g);

/// x^T A x / x^T x. Throws Error{ZeroVector}.
double rayleigh_quotient(const SymmetricMatrix& a, std::span<const double> x);

struct NonnegativeSwitch {
  SignedGraph graph;
  SwitchSet switch_set;
  Spectrum spectrum;  // eigenvector is entrywise >= 0 (up to 1e-9)
};

/// Switches at U = {v : x_v < 0} for the principal eigenvector x of g. The
/// returned eigenvector is |x|, which is a lambda1-eigenvector of the switched
/// graph.
NonnegativeSwitch nonnegative_switching(const SignedGraph& g);

enum class Perturbation { add_positive_edge, delete_negative_edge, flip_negative_edge };

/// Applies the perturbation to edge {u, v}. Throws Error{EdgePresent} when
/// adding an existing edge, Error{EdgeAbsent} or Error{NotNegative} when
/// deleting/flipping a missing or positive edge.
SignedGraph perturb(const SignedGraph& g, Perturbation op, Vertex u, Vertex v);

/// (lambda1 before, lambda1 after).
std::pair<double, double> perturb_check(const SignedGraph& g, Perturbation op, Vertex u, Vertex v);

/// Greedy containment of multiset `small` in multiset `large`, both sorted in
/// any order, within absolute tolerance `tol`.
bool multiset_contained(std::vector<double> small, std::vector<double> large, double tol);

}  // namespace sgspec
