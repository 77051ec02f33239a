#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"
#include "sgspec/error.hpp"
#include "sgspec/extremal.hpp"
#include "sgspec/partition.hpp"
#include "sgspec/spectral.hpp"

using namespace sgspec;

namespace {

void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("adjacency_matrix") {
  const SignedGraph::RawEdge raw[] = {{0, 1, -1}};
  const auto a = adjacency_matrix(SignedGraph::from_edge_list(2, raw));
  CHECK(a(0, 1) == -1.0);
  CHECK(a(1, 0) == -1.0);
  CHECK(a(0, 0) == 0.0);
  CHECK(a.dump() == "0 -1\n-1 0\n");

  const auto c6 = adjacency_matrix(fixtures::negative_c6());
  for (int i = 0; i < 6; ++i) {
    CHECK(c6(i, i) == 0.0);
    CHECK(std::abs(c6(i, (i + 1) % 6)) == 1.0);
  }
  CHECK(c6(0, 1) == -1.0);
  CHECK(c6(1, 2) == 1.0);
  CHECK(c6(0, 3) == 0.0);

  CHECK(adjacency_matrix(SignedGraph::from_edges(3, {})).dump() == "0 0 0\n0 0 0\n0 0 0\n");
}

TEST_CASE("eigen_spectrum examples") {
  const SignedGraph::RawEdge raw[] = {{0, 1, -1}};
  check_values(eigen_spectrum(SignedGraph::from_edge_list(2, raw)).eigenvalues, {1.0, -1.0}, 1e-12);

  const double r3 = std::sqrt(3.0);
  const auto c6 = eigen_spectrum(fixtures::negative_c6());
  check_values(c6.eigenvalues, {r3, r3, 0.0, 0.0, -r3, -r3}, 1e-9);
  double squares = 0.0;
  for (double x : c6.eigenvalues) squares += x * x;
  CHECK(std::abs(squares - 12.0) < 1e-9);
  CHECK(c6.residual <= 1e-9 * (1 + r3));

  CHECK(std::abs(spectral_radius(build_gamma_rs(ExtremalParams(3, 3))) - r3) < 1e-9);
  CHECK(std::abs(spectral_radius(fixtures::path(3)) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(spectral_radius(build_gamma_rs(ExtremalParams(3, 4))) - std::sqrt(5.0)) < 1e-9);

  CHECK(eigen_spectrum(SymmetricMatrix(0)).eigenvalues.empty());
  check_values(eigen_spectrum(SignedGraph::from_edges(4, {})).eigenvalues, {0, 0, 0, 0}, 0.0);
}

TEST_CASE("spectral radius of a non-bipartite graph uses the negative end") {
  // -K4 has eigenvalues 1, 1, 1, -3.
  const auto neg_k4 = negate(fixtures::complete(4));
  const auto spec = eigen_spectrum(neg_k4);
  CHECK(std::abs(spec.lambda1() - 1.0) < 1e-12);
  CHECK(std::abs(spec.rho() - 3.0) < 1e-12);
  CHECK(std::abs(spectral_radius(neg_k4) - 3.0) < 1e-12);
}

TEST_CASE("eigenvalues match characteristic-polynomial roots for n <= 6") {
  testing_support::Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing_support::random_signed_graph(rng, 1, 6);
    const auto roots = oracle::real_roots(oracle::characteristic_polynomial(oracle::adjacency(g)));
    const auto values = eigenvalues(adjacency_matrix(g));
    REQUIRE(roots.size() == values.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i] - values[i]) <= 1e-9);
  }
}

TEST_CASE("eigenvalues agree with an independent Jacobi solver up to n = 40") {
  testing_support::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing_support::random_signed_graph(rng, 10, 40);
    std::vector<std::vector<double>> dense;
    for (const auto& row : oracle::adjacency(g)) dense.emplace_back(row.begin(), row.end());
    const auto want = oracle::jacobi_eigenvalues(dense);
    const auto spec = eigen_spectrum(g);
    check_values(spec.eigenvalues, want, 1e-9);
    CHECK(spec.residual <= 1e-9 * (1 + std::abs(spec.lambda1())));
  }
}

TEST_CASE("rayleigh_quotient") {
  const auto c6 = fixtures::negative_c6();
  const auto a = adjacency_matrix(c6);
  const auto spec = eigen_spectrum(a);
  CHECK(std::abs(rayleigh_quotient(a, spec.eigenvector) - spec.lambda1()) < 1e-12);

  const std::vector<double> ones(6, 1.0);
  CHECK(std::abs(rayleigh_quotient(a, ones) - 4.0 / 3.0) < 1e-15);
  CHECK(rayleigh_quotient(a, ones) <= std::sqrt(3.0) + 1e-9);

  std::vector<double> e1(6, 0.0);
  e1[0] = 1.0;
  CHECK(rayleigh_quotient(a, e1) == 0.0);

  const std::vector<double> zero(6, 0.0);
  CHECK_THROWS_AS(rayleigh_quotient(a, zero), Error);
}

TEST_CASE("nonnegative_switching") {
  SUBCASE("connected all-positive graph needs no switch") {
    const auto res = nonnegative_switching(fixtures::complete_bipartite(2, 3));
    CHECK(res.switch_set.empty());
    for (double x : res.spectrum.eigenvector) CHECK(x > 0.0);
  }
  SUBCASE("negated positive C6") {
    const auto g = negate(fixtures::cycle(6));
    const auto res = nonnegative_switching(g);
    CHECK(res.graph == switch_at(g, res.switch_set));
    CHECK(std::abs(res.spectrum.lambda1() - 2.0) < 1e-12);
    for (double x : res.spectrum.eigenvector) CHECK(x >= -1e-9);
    CHECK(res.spectrum.residual < 1e-9);
  }
  SUBCASE("construction (3,4)") {
    const auto res = nonnegative_switching(build_gamma_rs(ExtremalParams(3, 4)));
    CHECK(std::abs(res.spectrum.lambda1() - std::sqrt(5.0)) < 1e-9);
    for (double x : res.spectrum.eigenvector) CHECK(x >= -1e-9);
    CHECK(res.spectrum.residual < 1e-9);
  }
}

TEST_CASE("perturb_check") {
  SUBCASE("adding the missing edge of P3") {
    const auto [before, after] = perturb_check(fixtures::path(3), Perturbation::add_positive_edge, 0, 2);
    CHECK(std::abs(before - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(after - 2.0) < 1e-12);
  }
  SUBCASE("flipping the negative edge of C6") {
    const auto [before, after] = perturb_check(fixtures::negative_c6(), Perturbation::flip_negative_edge, 0, 1);
    CHECK(std::abs(before - std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(after - 2.0) < 1e-12);
  }
  SUBCASE("deleting the central negative edge of the (3,4) construction") {
    const ExtremalParams p(3, 4);
    const auto at = gamma_layout(p);
    const auto [before, after] = perturb_check(build_gamma_rs(p), Perturbation::delete_negative_edge, at.v1, at.u1);
    CHECK(after > before + 1e-10);
  }
  SUBCASE("errors") {
    const auto c6 = fixtures::negative_c6();
    auto code = [&](Perturbation op, Vertex u, Vertex v) {
      try {
        perturb(c6, op, u, v);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::BadParams;
    };
    CHECK(code(Perturbation::add_positive_edge, 0, 1) == ErrorCode::EdgePresent);
    CHECK(code(Perturbation::delete_negative_edge, 0, 2) == ErrorCode::EdgeAbsent);
    CHECK(code(Perturbation::flip_negative_edge, 1, 2) == ErrorCode::NotNegative);
  }
}

TEST_CASE("quotient_matrix") {
  SUBCASE("singletons give the matrix itself") {
    const auto a = adjacency_matrix(fixtures::negative_c6());
    const auto p = VertexPartition::singletons(6);
    const auto q = quotient_matrix(a, p);
    CHECK(q.equitable);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(q(i, j) == a(i, j));
    CHECK(quotient_spectrum_contained(a, p));
  }
  SUBCASE("six-block partition of the construction") {
    for (int r = 3; r <= 6; ++r) {
      for (int s = r; s <= 7; ++s) {
        const ExtremalParams p(r, s);
        const auto q = quotient_matrix(adjacency_matrix(build_gamma_rs(p)), gamma_partition(p));
        CHECK(q.equitable);
        const double rr = r - 2;
        const double ss = s - 2;
        const std::vector<double> want = {0, 0, 0, -1, 1, 0,   //
                                          0, 0, 0, 1,  0, ss,  //
                                          0, 0, 0, 0,  1, ss,  //
                                          -1, 1, 0, 0, 0, 0,   //
                                          1, 0, rr, 0, 0, 0,   //
                                          0, 1, rr, 0, 0, 0};
        CHECK(q.entries == want);
      }
    }
  }
  SUBCASE("(3,3) quotient spectrum") {
    const ExtremalParams p(3, 3);
    const auto a = adjacency_matrix(build_gamma_rs(p));
    const auto part = gamma_partition(p);
    const double r3 = std::sqrt(3.0);
    check_values(quotient_eigenvalues(quotient_matrix(a, part), part), {r3, r3, 0, 0, -r3, -r3}, 1e-9);
    CHECK(quotient_spectrum_contained(a, part));
  }
  SUBCASE("mixing u1 into V1 minus u breaks equitability") {
    const ExtremalParams p(4, 5);
    const auto at = gamma_layout(p);
    const auto base = gamma_partition(p);
    std::vector<Vertex> mixed = base.block(2);
    mixed.push_back(at.u1);
    const VertexPartition part(p.n(), {{at.u}, mixed, {at.v1}, {at.v}, base.block(5)});
    const auto a = adjacency_matrix(build_gamma_rs(p));
    CHECK_FALSE(quotient_matrix(a, part).equitable);
    try {
      quotient_spectrum_contained(a, part);
      FAIL("expected NotEquitable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotEquitable);
    }
  }
  SUBCASE("bad partitions") {
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1, 2}, {}}), Error);
  }
}

TEST_CASE("multiset containment is greedy but respects multiplicity") {
  CHECK(multiset_contained({1.0, 1.0}, {1.0, 0.0, 1.0 + 1e-9}, 1e-7));
  CHECK_FALSE(multiset_contained({1.0, 1.0}, {1.0, 0.0, 2.0}, 1e-7));
  CHECK(multiset_contained({}, {}, 1e-7));
}
