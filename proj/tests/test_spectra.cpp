#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "eccspec/generators.hpp"
#include "eccspec/spectra.hpp"
#include "oracles.hpp"

using namespace eccspec;
using doctest::Approx;

namespace {

IntMatrix eps_of(const Graph& g) { return eccentricity_matrix(metric(g)); }

void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

CharPoly poly(std::initializer_list<long> low_to_high) {
  CharPoly p;
  for (long c : low_to_high) p.coeffs.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("oracle: cofactor expansion on the P4 eccentricity matrix") {
  // Frozen from the cofactor oracle: det = 16, char poly x^4 - 17x^2 + 16.
  IntMatrix e = eps_of(path(4));
  CHECK(oracle::cofactor_det(e) == 16);
  auto cp = oracle::char_poly_by_interpolation(e);
  CHECK(cp == std::vector<BigInt>{16, 0, -17, 0, 1});
}

TEST_CASE("eigenvalues_sym examples") {
  SUBCASE("P4") {
    Spectrum s = eigenvalues_sym(eps_of(path(4)));
    check_values(s.values, {4, 1, -1, -4});
    CHECK(s.energy == Approx(10).epsilon(1e-12));
    CHECK(s.radius == Approx(4).epsilon(1e-12));
  }
  SUBCASE("K_{1,4}") {
    Spectrum s = eigenvalues_sym(eps_of(star(5)));
    const double r = std::sqrt(13.0);
    check_values(s.values, {3 + r, 3 - r, -2, -2, -2});
    CHECK(std::abs(s.radius - 6.605551275463989) < 1e-9);
    REQUIRE(s.groups.size() == 3);
    CHECK(s.groups[2].second == 3);
  }
  SUBCASE("K_{2,3}") {
    check_values(eigenvalues_sym(eps_of(complete_bipartite(2, 3))).values, {4, 2, -2, -2, -2});
  }
  SUBCASE("non-symmetric input") {
    CHECK_THROWS_AS(eigenvalues_sym(IntMatrix::from_rows({{0, 1}, {2, 0}})), ContractError);
  }
  SUBCASE("empty and 1x1") {
    CHECK(eigenvalues_sym(IntMatrix(0)).values.empty());
    check_values(eigenvalues_sym(IntMatrix::from_rows({{5}})).values, {5});
  }
}

TEST_CASE("spectral_radius and energy") {
  Spectrum s = eigenvalues_sym(IntMatrix::from_rows({{0, 2}, {2, 0}}));
  CHECK(spectral_radius(s) == Approx(2));
  CHECK(energy(s) == Approx(4));

  CHECK(energy(eigenvalues_sym(eps_of(complete_bipartite(3, 4)))) == Approx(20).epsilon(1e-12));

  Spectrum c6 = eigenvalues_sym(eps_of(cycle(6)));
  CHECK(std::abs(spectral_radius(c6) - 3) < 1e-9);
  CHECK(std::abs(energy(c6) - 18) < 1e-9);
  REQUIRE(c6.groups.size() == 2);
  CHECK(c6.groups[0].second == 3);
  CHECK(c6.groups[1].second == 3);
}

TEST_CASE("char_poly_exact examples") {
  CHECK(char_poly_exact(eps_of(path(4))) == poly({16, 0, -17, 0, 1}));
  CHECK(char_poly_exact(eps_of(path(4))).pretty() == "x^4 - 17x^2 + 16");
  CHECK(char_poly_exact(IntMatrix(3)) == poly({0, 0, 0, 1}));
  CharPoly s5 = char_poly_exact(eps_of(star(5)));
  CHECK(s5.coeffs[0] == -32);  // (-1)^5 det, det = 32
  CHECK(s5.coeffs[4] == 0);
}

TEST_CASE("determinant_exact examples") {
  CHECK(determinant_exact(eps_of(star(6))) == -80);
  CHECK(determinant_exact(eps_of(path(4))) == 16);
  CHECK(determinant_exact(eps_of(path(5))) == 0);
  CHECK(determinant_exact(IntMatrix(0)) == 1);
  // Needs a row swap: zero leading pivot.
  CHECK(determinant_exact(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant_exact(IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
}

TEST_CASE("is_cospectral") {
  CHECK_FALSE(is_cospectral(eps_of(complete_bipartite(2, 4)), eps_of(complete_bipartite(3, 3))));
  IntMatrix p4 = eps_of(path(4));
  CHECK(is_cospectral(p4, p4));
  CHECK_THROWS_AS(is_cospectral(p4, eps_of(path(5))), ContractError);
}

TEST_CASE("quotient_bound examples") {
  auto s5 = star(5);
  auto prof = epsilon_profile(s5, eps_of(s5));
  CHECK(std::abs(quotient_bound(prof, 0, 5) - (3 + std::sqrt(13.0))) < 1e-12);
  CHECK(std::abs(quotient_bound(prof, 0, 5) - eigenvalues_sym(eps_of(s5)).radius) < 1e-9);

  auto c6 = cycle(6);
  auto pc = epsilon_profile(c6, eps_of(c6));
  CHECK(std::abs(quotient_bound(pc, 2, 6) - 3) < 1e-12);
  CHECK(max_quotient_bound(pc).first == Approx(3));

  auto k2 = complete(2);
  auto pk = epsilon_profile(k2, eps_of(k2));
  CHECK(quotient_bound(pk, 0, 2) == Approx(1));
  CHECK_THROWS_AS(quotient_bound(pk, 0, 1), ContractError);
}

TEST_CASE("interlacing_check") {
  IntMatrix s = eps_of(star(5));
  CHECK(interlacing_check(s, {0, 1, 2, 3, 4}));
  CHECK(interlacing_check(s, {1, 2}));
  CHECK(eigenvalues_sym(s.principal({1, 2})).values == std::vector<double>{2, -2});
  CHECK_THROWS_AS(interlacing_check(s, {1, 1}), ContractError);
  CHECK_THROWS_AS(interlacing_check(s, {7}), ContractError);

  RealMatrix tiny(2);
  tiny(0, 1) = tiny(1, 0) = 1;
  CHECK(interlacing_check(tiny, {0}));

  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 1000; ++trial) {
    RealMatrix m(6);
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j) m(i, j) = m(j, i) = normal(rng);
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(3);
    REQUIRE(interlacing_check(m, idx));
  }
}

TEST_CASE("Jacobi agrees with Eigen and with the exact characteristic polynomial") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graph_corpus(n)) {
      for (const IntMatrix& m : {eps_of(g), distance_matrix(metric(g))}) {
        Spectrum s = eigenvalues_sym(m);
        check_values(s.values, oracle::eigen_eigenvalues(m), 1e-9);
        CharPoly p = char_poly_exact(m);
        REQUIRE(p.coeffs == oracle::char_poly_by_interpolation(m));
        for (double v : s.values) CHECK(is_approximate_root(p, v));
        const BigInt det = determinant_exact(m);
        CHECK(det == (n % 2 == 0 ? p.coeffs[0] : BigInt(-p.coeffs[0])));
        CHECK(p.coeffs[n - 1] == 0);
      }
    }
  }
}

TEST_CASE("spectrum invariants: trace, Frobenius norm, determinant, energy") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graph_corpus(n)) {
      IntMatrix m = eps_of(g);
      Spectrum s = eigenvalues_sym(m);
      double sum = 0, sq = 0, prod = 1, frob = 0;
      for (double v : s.values) {
        sum += v;
        sq += v * v;
        prod *= v;
      }
      for (auto x : m.data()) frob += static_cast<double>(x * x);
      CHECK(std::abs(sum) <= 1e-8);
      CHECK(std::abs(sq - frob) <= 1e-6 * frob);
      CHECK(s.energy >= 2 * s.radius - 1e-9);
      const double det = determinant_exact(m).convert_to<double>();
      if (det != 0) CHECK(std::abs(prod - det) <= 1e-6 * std::abs(det));
    }
  }
}

TEST_CASE("Jacobi spectrum is invariant under simultaneous row/column permutation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_connected_graph(8 + static_cast<int>(trial % 10), 0.3, trial);
    IntMatrix m = eps_of(g);
    std::vector<int> perm(m.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    check_values(eigenvalues_sym(m.principal(perm)).values, eigenvalues_sym(m).values, 1e-9);
  }
}

TEST_CASE("entrywise domination implies spectral-radius domination") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    RealMatrix a(n), b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double hi = 3 * unit(rng);
        const double lo = hi * unit(rng) - (unit(rng) < 0.2 ? unit(rng) : 0.0);
        b(i, j) = b(j, i) = hi;
        a(i, j) = a(j, i) = lo;
      }
    }
    REQUIRE(eigenvalues_sym(a).radius <= eigenvalues_sym(b).radius + 1e-9);
  }
}

TEST_CASE("cluster_eigenvalues") {
  auto g = cluster_eigenvalues({4.0, 4.0 + 1e-12, 1.0, -2.0, -2.0 - 5e-9, -2.0 + 1e-10});
  REQUIRE(g.size() == 3);
  CHECK(g[0].second == 2);
  CHECK(g[1].second == 1);
  CHECK(g[2].second == 3);
  CHECK(cluster_eigenvalues({1.0, 0.9}).size() == 2);
}

TEST_CASE("Faddeev-LeVerrier on larger matrices matches Bareiss") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_connected_graph(20, 0.2, seed);
    for (const IntMatrix& m : {eps_of(g), distance_matrix(metric(g))}) {
      CharPoly p = char_poly_exact(m);
      BigInt det = determinant_exact(m);
      CHECK(det == p.coeffs[0]);  // n = 20 is even
    }
  }
}
