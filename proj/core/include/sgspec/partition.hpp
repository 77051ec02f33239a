#pragma once

#include <vector>

#include "sgspec/signed_graph.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

/// Ordered blocks X_1, ..., X_t covering 0..n-1 disjointly.
class VertexPartition {
 public:
  /// Throws Error{BadParams} if a block is empty, blocks overlap, or some
  /// vertex of 0..n-1 is missing.
  VertexPartition(int n, std::vector<std::vector<Vertex>> blocks);

  static VertexPartition singletons(int n);

  int order() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<Vertex>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }

 private:
  int n_;
  std::vector<std::vector<Vertex>> blocks_;
};

struct QuotientMatrix {
  int t = 0;
  std::vector<double> entries;  // t x t row-major, average block row sums
  bool equitable = false;

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(t) +
                   static_cast<std::size_t>(j)];
  }
};

/// Block row sums are accumulated in double; for integer-valued matrices of the
/// sizes used here every sum is exactly representable, so the equitable test
/// is an exact comparison.
QuotientMatrix quotient_matrix(const SymmetricMatrix& a, const VertexPartition& p);

/// Eigenvalues of an equitable quotient, descending. Uses the symmetrization
/// D^{1/2} Q D^{-1/2} with D = diag(|X_i|). Throws Error{NotEquitable}.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const VertexPartition& p);

/// Every quotient eigenvalue matched to a distinct eigenvalue of `a` within
/// `tol`. Throws Error{NotEquitable}.
bool quotient_spectrum_contained(const SymmetricMatrix& a, const VertexPartition& p,
                                 double tol = 1e-7);

}  // namespace sgspec
