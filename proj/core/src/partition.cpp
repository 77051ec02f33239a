#include "sgspec/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgspec/error.hpp"

namespace sgspec {

VertexPartition::VertexPartition(int n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::BadParams, "partition block is empty");
    for (Vertex v : block) {
      if (v < 0 || v >= n) throw Error(ErrorCode::BadParams, "partition vertex out of range");
      if (covered[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::BadParams, "vertex " + std::to_string(v) + " in two blocks");
      }
      covered[static_cast<std::size_t>(v)] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw Error(ErrorCode::BadParams, "partition does not cover every vertex");
  }
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n; ++v) blocks.push_back({v});
  return VertexPartition(n, std::move(blocks));
}

QuotientMatrix quotient_matrix(const SymmetricMatrix& a, const VertexPartition& p) {
  if (a.order() != p.order()) throw Error(ErrorCode::BadParams, "partition order mismatch");
  QuotientMatrix q;
  q.t = p.block_count();
  q.entries.assign(static_cast<std::size_t>(q.t) * static_cast<std::size_t>(q.t), 0.0);
  q.equitable = true;
  for (int i = 0; i < q.t; ++i) {
    const auto& rows = p.block(i);
    for (int j = 0; j < q.t; ++j) {
      const auto& cols = p.block(j);
      double total = 0.0;
      double first = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        double row_sum = 0.0;
        for (Vertex c : cols) row_sum += a(rows[k], c);
        if (k == 0) {
          first = row_sum;
        } else if (row_sum != first) {
          q.equitable = false;
        }
        total += row_sum;
      }
      q.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(q.t) +
                static_cast<std::size_t>(j)] = total / static_cast<double>(rows.size());
    }
  }
  return q;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const VertexPartition& p) {
  if (!q.equitable) throw Error(ErrorCode::NotEquitable, "quotient of a non-equitable partition");
  SymmetricMatrix sym(q.t);
  for (int i = 0; i < q.t; ++i) {
    for (int j = i; j < q.t; ++j) {
      const double scale = std::sqrt(static_cast<double>(p.block(i).size()) /
                                     static_cast<double>(p.block(j).size()));
      sym.set(i, j, q(i, j) * scale);
    }
  }
  return eigenvalues(sym);
}

bool quotient_spectrum_contained(const SymmetricMatrix& a, const VertexPartition& p, double tol) {
  const QuotientMatrix q = quotient_matrix(a, p);
  return multiset_contained(quotient_eigenvalues(q, p), eigenvalues(a), tol);
}

}  // namespace sgspec
