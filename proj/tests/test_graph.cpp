#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eccspec/generators.hpp"
#include "eccspec/graph.hpp"
#include "oracles.hpp"

using namespace eccspec;

TEST_CASE("parse_edge_list builds the smallest path") {
  Graph g = parse_edge_list("3\n0 1\n1 2");
  CHECK(g.order() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g == path(3));
}

TEST_CASE("parse_edge_list rejects self-loops") {
  CHECK_THROWS_AS(parse_edge_list("2\n0 0"), GraphError);
}

TEST_CASE("parse_edge_list star") {
  Graph g = parse_edge_list("5\n0 1\n0 2\n0 3\n0 4");
  CHECK(g == star(5));
  CHECK(g.degree(0) == 4);
}

TEST_CASE("parse_edge_list details") {
  SUBCASE("comments, blank lines and duplicates") {
    Graph g = parse_edge_list("# a triangle\n3\n\n0 1\n1 0\n1 2\n# trailing\n2 0\n");
    CHECK(g.size() == 3);
  }
  SUBCASE("header optional when every vertex has an edge") {
    CHECK(parse_edge_list("0 1\n1 2\n") == path(3));
  }
  SUBCASE("isolated vertices need the header") {
    CHECK_THROWS_AS(parse_edge_list("0 2\n"), ParseError);
    Graph g = parse_edge_list("3\n0 2\n");
    CHECK(g.order() == 3);
    CHECK(g.degree(1) == 0);
  }
  SUBCASE("malformed token reports its line") {
    try {
      parse_edge_list("3\n0 1\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("negative ids and wrong arity") {
    CHECK_THROWS_AS(parse_edge_list("3\n0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  }
  SUBCASE("ids beyond the declared count") {
    CHECK_THROWS_AS(parse_edge_list("2\n0 2\n"), ParseError);
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_edge_list(""), ParseError); }
}

TEST_CASE("graph6 examples") {
  // n = 2 with its single upper-triangle bit set: 'A' (63+2) then 100000b + 63 = '_'.
  CHECK(to_graph6(complete_bipartite(1, 1)) == "A_");
  CHECK(parse_graph6("A_") == path(2));

  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(to_graph6(g) == "D?{");

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("   "), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // too short
  CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);     // too long
  CHECK_THROWS_AS(parse_graph6("D?\x7f"), ParseError);   // byte > 126
  CHECK_THROWS_AS(parse_graph6("D? "), ParseError);      // byte < 63 inside data
  CHECK_THROWS_AS(parse_graph6("B@"), ParseError);       // padding bit set
  CHECK(parse_graph6(">>graph6<<A_\n") == path(2));
  CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 long-form vertex counts") {
  Graph g = cycle(70);
  std::string s = to_graph6(g);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 round trip on random and enumerated graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<Edge> edges;
    const double p = static_cast<double>(rng() % 100) / 100.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(n, edges);
    auto s = to_graph6(g);
    Graph back = parse_graph6(s);
    REQUIRE(back == g);
    CHECK(to_graph6(back) == s);
  }
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graph_corpus(n)) REQUIRE(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("bfs_distances") {
  CHECK(bfs_distances(path(4), 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distances(star(5), 0) == std::vector<int>{0, 1, 1, 1, 1});
  Graph two_k1 = Graph::from_edges(2, {});
  CHECK(bfs_distances(two_k1, 0) == std::vector<int>{0, kUnreachable});
  CHECK_THROWS_AS(bfs_distances(path(3), 3), ContractError);
}

TEST_CASE("metric examples") {
  Metric p4 = metric(path(4));
  CHECK(p4.ecc == std::vector<int>{3, 2, 2, 3});
  CHECK(p4.diam == 3);
  CHECK(p4.rad == 2);

  Metric c6 = metric(cycle(6));
  CHECK(c6.ecc == std::vector<int>(6, 3));
  CHECK(c6.diam == 3);
  CHECK(c6.rad == 3);

  Metric s5 = metric(star(5));
  CHECK(s5.ecc == std::vector<int>{1, 2, 2, 2, 2});
  CHECK(s5.diam == 2);
  CHECK(s5.rad == 1);

  CHECK_THROWS_AS(metric(Graph::from_edges(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(complete(4)));
  CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph::from_edges(1, {})));
}

namespace {

void check_metric_invariants(const Graph& g) {
  const Metric m = metric(g);
  const int n = g.order();
  REQUIRE(m.dist == [&] {
    auto fw = oracle::floyd_warshall(g);
    return std::vector<int>(fw.begin(), fw.end());
  }());
  for (int u = 0; u < n; ++u) {
    CHECK(m(u, u) == 0);
    int e = 0;
    for (int v = 0; v < n; ++v) {
      CHECK(m(u, v) == m(v, u));
      if (u != v) CHECK(m(u, v) >= 1);
      e = std::max(e, m(u, v));
      for (int w = 0; w < n; ++w) CHECK(m(u, w) <= m(u, v) + m(v, w));
    }
    CHECK(m.ecc[u] == e);
  }
  CHECK(m.rad <= m.diam);
  CHECK(m.diam <= 2 * m.rad);
}

}  // namespace

TEST_CASE("metric agrees with Floyd-Warshall on every connected graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graph_corpus(n)) check_metric_invariants(g);
}

TEST_CASE("metric agrees with Floyd-Warshall on random larger graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    check_metric_invariants(random_connected_graph(10 + static_cast<int>(seed % 25), 0.15, seed));
  }
}

TEST_CASE("Graph::from_edges validation") {
  CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
  Graph g = Graph::from_edges(3, {{2, 0}, {0, 2}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  auto nb = g.neighbors(0);
  CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 2});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));
}
