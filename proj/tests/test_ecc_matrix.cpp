#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/generators.hpp"
#include "oracles.hpp"

using namespace eccspec;

namespace {

IntMatrix eps_of(const Graph& g) { return eccentricity_matrix(metric(g)); }
IntMatrix dist_of(const Graph& g) { return distance_matrix(metric(g)); }

}  // namespace

TEST_CASE("distance_matrix examples") {
  IntMatrix d = dist_of(star(5));
  for (int v = 1; v < 5; ++v) CHECK(d(0, v) == 1);
  for (int u = 1; u < 5; ++u)
    for (int v = 1; v < 5; ++v) CHECK(d(u, v) == (u == v ? 0 : 2));

  IntMatrix k5 = dist_of(complete(5));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(k5(u, v) == (u == v ? 0 : 1));

  CHECK(dist_of(path(4)).rows()[0] == std::vector<std::int64_t>{0, 1, 2, 3});
}

TEST_CASE("eccentricity_matrix of P4") {
  // ecc = (3, 2, 2, 3); keep d(u,v) only where it equals min(e(u), e(v)).
  IntMatrix expected = IntMatrix::from_rows({{0, 0, 2, 3}, {0, 0, 0, 2}, {2, 0, 0, 0}, {3, 2, 0, 0}});
  CHECK(eps_of(path(4)) == expected);
}

TEST_CASE("eccentricity matrix equals the distance matrix for stars") {
  for (int n = 2; n <= 10; ++n) CHECK(eps_of(star(n)) == dist_of(star(n)));
}

TEST_CASE("eccentricity matrix of K_{p,q} is block diagonal 2(J - I)") {
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      IntMatrix e = eps_of(complete_bipartite(p, q));
      for (int u = 0; u < p + q; ++u) {
        for (int v = 0; v < p + q; ++v) {
          const bool same_part = (u < p) == (v < p);
          CHECK(e(u, v) == (same_part && u != v ? 2 : 0));
        }
      }
    }
  }
}

TEST_CASE("K_2 follows the formula") {
  CHECK(eps_of(complete(2)) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("epsilon_profile examples") {
  SUBCASE("star K_{1,4}") {
    auto p = epsilon_profile(star(5), eps_of(star(5)));
    CHECK(p.degrees == std::vector<std::int64_t>{4, 7, 7, 7, 7});
    CHECK(p.wiener == 16);
    CHECK_FALSE(p.is_regular);
    CHECK(p.m == 4);
    CHECK(p.k == 1);
    CHECK(p.classic_wiener == 16);  // eps = D for stars
  }
  SUBCASE("K_{3,3}") {
    auto g = complete_bipartite(3, 3);
    auto p = epsilon_profile(g, eps_of(g));
    CHECK(p.degrees == std::vector<std::int64_t>(6, 4));
    CHECK(p.wiener == 12);
    CHECK(p.is_regular);
  }
  SUBCASE("C4") {
    auto p = epsilon_profile(cycle(4), eps_of(cycle(4)));
    CHECK(p.degrees == std::vector<std::int64_t>(4, 2));
    CHECK(p.wiener == 4);
    CHECK(p.is_regular);
  }
  CHECK_THROWS_AS(epsilon_profile(path(3), eps_of(path(4))), ContractError);
}

TEST_CASE("is_diametrical") {
  CHECK(is_diametrical(metric(cycle(6))));
  CHECK_FALSE(is_diametrical(metric(star(5))));
  CHECK(is_diametrical(metric(crown(3))));
  CHECK(is_diametrical(metric(crown(5))));
  CHECK_FALSE(is_diametrical(metric(cycle(5))));
  CHECK_FALSE(is_diametrical(metric(path(4))));
}

TEST_CASE("is_epsilon_regular") {
  for (int n = 2; n <= 5; ++n) {
    auto g = complete_bipartite(n, n);
    CHECK(is_epsilon_regular(epsilon_profile(g, eps_of(g))));
  }
  CHECK_FALSE(is_epsilon_regular(epsilon_profile(star(5), eps_of(star(5)))));
  CHECK(is_epsilon_regular(epsilon_profile(cycle(5), eps_of(cycle(5)))));
}

TEST_CASE("eccentricity matrix invariants on every connected graph up to 7 vertices") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graph_corpus(n)) {
      const Metric m = metric(g);
      const IntMatrix e = eccentricity_matrix(m);
      const IntMatrix d = distance_matrix(m);
      REQUIRE(e.rows() == oracle::eccentricity_by_definition(g));
      CHECK(e.is_symmetric());
      CHECK(e.trace() == 0);
      const bool diametrical = is_diametrical(m);
      for (int u = 0; u < n; ++u) {
        int nonzero = 0;
        for (int v = 0; v < n; ++v) {
          CHECK(e(u, v) <= d(u, v));
          if (e(u, v) != 0) {
            ++nonzero;
            CHECK(e(u, v) == std::min(m.ecc[u], m.ecc[v]));
            if (m.diam == 2 && g.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
              CHECK((e(u, v) == 1 || e(u, v) == 2));
            }
            if (diametrical) CHECK(e(u, v) == m.diam);
          }
          if (m.diam == m.rad && u != v) CHECK((e(u, v) != 0) == (d(u, v) == m.diam));
        }
        CHECK(nonzero >= 1);
        if (diametrical) CHECK(nonzero == 1);
      }
      auto p = epsilon_profile(g, m, e);
      CHECK(std::accumulate(p.degrees.begin(), p.degrees.end(), std::int64_t{0}) == 2 * p.wiener);
    }
  }
}
