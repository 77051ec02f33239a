#include "sgspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sgspec/error.hpp"

namespace sgspec {

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_; ++j) acc += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

std::string SymmetricMatrix::dump() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out << ' ';
      const double x = (*this)(i, j);
      if (x == std::round(x)) {
        out << static_cast<long long>(x);
      } else {
        out << x;
      }
    }
    out << '\n';
  }
  return out.str();
}

SymmetricMatrix adjacency_matrix(const SignedGraph& g) {
  SymmetricMatrix a(g.order());
  for (const auto& e : g.edges()) a.set(e.u, e.v, static_cast<double>(value(e.sign)));
  return a;
}

double Spectrum::rho() const {
  if (eigenvalues.empty()) return 0.0;
  return std::max(eigenvalues.front(), -eigenvalues.back());
}

namespace {

constexpr int max_ql_iterations = 64;

// Dense n x n work matrix, row-major.
struct Work {
  int n;
  std::vector<double> v;
  double& operator()(int i, int j) {
    return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
};

// Householder reduction to tridiagonal form. On exit d holds the diagonal,
// e the subdiagonal in e[1..n-1], and w the accumulated orthogonal transform.
void tridiagonalize(Work& w, std::vector<double>& d, std::vector<double>& e) {
  const int n = w.n;
  for (int j = 0; j < n; ++j) d[j] = w(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = w(i - 1, j);
        w(i, j) = 0.0;
        w(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        w(j, i) = f;
        g = e[j] + w(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += w(k, j) * d[k];
          e[k] += w(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) w(k, j) -= (f * e[k] + g * d[k]);
        d[j] = w(i - 1, j);
        w(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    w(n - 1, i) = w(i, i);
    w(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = w(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += w(k, i + 1) * w(k, j);
        for (int k = 0; k <= i; ++k) w(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) w(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = w(n - 1, j);
    w(n - 1, j) = 0.0;
  }
  w(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL on the tridiagonal (d, e). Rotations are applied to w only when
// vectors are wanted.
void ql_implicit(Work& w, std::vector<double>& d, std::vector<double>& e, bool vectors) {
  const int n = w.n;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_ql_iterations) {
          throw Error(ErrorCode::ConvergenceFailure,
                      "QL iteration did not converge for eigenvalue " + std::to_string(l));
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (vectors) {
            for (int k = 0; k < n; ++k) {
              h = w(k, i + 1);
              w(k, i + 1) = s * w(k, i) + c * h;
              w(k, i) = c * w(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

struct Decomposition {
  std::vector<double> values;
  Work vectors;
};

Decomposition decompose(const SymmetricMatrix& a, bool want_vectors) {
  const int n = a.order();
  Decomposition out{std::vector<double>(static_cast<std::size_t>(n)), Work{n, {}}};
  if (n == 0) return out;
  out.vectors.v.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.vectors(i, j) = a(i, j);
  }
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  tridiagonalize(out.vectors, out.values, e);
  ql_implicit(out.vectors, out.values, e, want_vectors);
  return out;
}

double norm(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

double residual_norm(const SymmetricMatrix& a, std::span<const double> x, double lambda) {
  const auto ax = a.multiply(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const double r = ax[i] - lambda * x[i];
    acc += r * r;
  }
  return std::sqrt(acc);
}

void orient(std::vector<double>& x) {
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  bool flip = sum < -1e-12;
  if (std::abs(sum) <= 1e-12) {
    auto first = std::find_if(x.begin(), x.end(), [](double v) { return std::abs(v) > 1e-12; });
    flip = first != x.end() && *first < 0;
  }
  if (flip) {
    for (double& v : x) v = -v;
  }
}

}  // namespace

std::vector<double> eigenvalues(const SymmetricMatrix& a) {
  auto dec = decompose(a, false);
  std::sort(dec.values.begin(), dec.values.end(), std::greater<>());
  return dec.values;
}

Spectrum eigen_spectrum(const SymmetricMatrix& a) {
  const int n = a.order();
  Spectrum out;
  if (n == 0) return out;
  auto dec = decompose(a, true);
  const auto top = static_cast<int>(std::max_element(dec.values.begin(), dec.values.end()) -
                                    dec.values.begin());
  out.eigenvector.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.eigenvector[static_cast<std::size_t>(i)] = dec.vectors(i, top);
  const double len = norm(out.eigenvector);
  for (double& v : out.eigenvector) v /= len;
  orient(out.eigenvector);
  out.eigenvalues = std::move(dec.values);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  out.residual = residual_norm(a, out.eigenvector, out.eigenvalues.front());
  return out;
}

Spectrum eigen_spectrum(const SignedGraph& g) { return eigen_spectrum(adjacency_matrix(g)); }

double spectral_radius(const SignedGraph& g) {
  const auto values = eigenvalues(adjacency_matrix(g));
  if (values.empty()) return 0.0;
  return std::max(values.front(), -values.back());
}

double rayleigh_quotient(const SymmetricMatrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.order()) {
    throw Error(ErrorCode::BadParams, "vector length does not match matrix order");
  }
  const double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (xx == 0.0) throw Error(ErrorCode::ZeroVector, "Rayleigh quotient of the zero vector");
  const auto ax = a.multiply(x);
  return std::inner_product(x.begin(), x.end(), ax.begin(), 0.0) / xx;
}

NonnegativeSwitch nonnegative_switching(const SignedGraph& g) {
  Spectrum spectrum = eigen_spectrum(g);
  SwitchSet u_set(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (spectrum.eigenvector[static_cast<std::size_t>(v)] < 0) u_set.insert(v);
  }
  SignedGraph switched = switch_at(g, u_set);
  for (double& x : spectrum.eigenvector) x = std::abs(x);
  spectrum.residual =
      residual_norm(adjacency_matrix(switched), spectrum.eigenvector, spectrum.lambda1());
  return NonnegativeSwitch{std::move(switched), std::move(u_set), std::move(spectrum)};
}

SignedGraph perturb(const SignedGraph& g, Perturbation op, Vertex u, Vertex v) {
  const auto current = g.sign(u, v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "perturbation on a loop");
  std::vector<SignedEdge> edges = g.edges();
  const auto lo = std::min(u, v);
  const auto hi = std::max(u, v);
  auto it = std::find_if(edges.begin(), edges.end(),
                         [&](const SignedEdge& e) { return e.u == lo && e.v == hi; });
  switch (op) {
    case Perturbation::add_positive_edge:
      if (current) throw Error(ErrorCode::EdgePresent, "edge already present");
      edges.push_back({lo, hi, Sign::positive});
      break;
    case Perturbation::delete_negative_edge:
    case Perturbation::flip_negative_edge:
      if (!current) throw Error(ErrorCode::EdgeAbsent, "edge not present");
      if (*current != Sign::negative) throw Error(ErrorCode::NotNegative, "edge is positive");
      if (op == Perturbation::delete_negative_edge) {
        edges.erase(it);
      } else {
        it->sign = Sign::positive;
      }
      break;
  }
  return SignedGraph::from_edges(g.order(), edges);
}

std::pair<double, double> perturb_check(const SignedGraph& g, Perturbation op, Vertex u, Vertex v) {
  const SignedGraph after = perturb(g, op, u, v);
  return {eigenvalues(adjacency_matrix(g)).front(), eigenvalues(adjacency_matrix(after)).front()};
}

bool multiset_contained(std::vector<double> small, std::vector<double> large, double tol) {
  if (small.size() > large.size()) return false;
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  std::vector<bool> used(large.size(), false);
  for (double x : small) {
    std::size_t best = large.size();
    double best_gap = tol;
    for (std::size_t i = 0; i < large.size(); ++i) {
      if (used[i]) continue;
      const double gap = std::abs(large[i] - x);
      if (gap <= best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best == large.size()) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace sgspec
