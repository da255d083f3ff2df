#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "eccspec/report.hpp"
#include "eccspec/verify.hpp"

using namespace eccspec;

namespace {

Settings serial() {
  Settings s;
  s.jobs = 1;
  return s;
}

Json scrubbed(const CheckReport& r) {
  Json j = to_json(r);
  j.erase("wall_time_s");
  return j;
}

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& c : r.counterexamples) out += c.graph6 + ": expected " + c.expected + ", got " + c.actual + "\n";
  return out;
}

}  // namespace

TEST_CASE("check identifiers are stable and unique") {
  const auto& ids = check_ids();
  CHECK(ids.size() == 10);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(ids.front() == "star-invertibility");
}

TEST_CASE("Universe builders") {
  auto u = Universe::exhaustive(1, 5, serial());
  CHECK(u.graphs.size() == 1 + 1 + 2 + 6 + 21);
  auto s = Universe::single(path(4), "P4");
  CHECK(s.graphs.size() == 1);
  CHECK(s.description == "P4");
}

TEST_CASE("analyze") {
  GraphFacts f = analyze(path(4), true);
  CHECK(f.graph6 == to_graph6(path(4)));
  CHECK(f.metric.diam == 3);
  CHECK(f.profile.wiener == 7);
  CHECK(std::abs(f.eps_spectrum.radius - 4) < 1e-9);
  CHECK(f.dist_radius > f.eps_spectrum.radius);
  CHECK_THROWS_AS(analyze(Graph::from_edges(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("star-invertibility holds for trees up to 10 vertices") {
  auto r = check_star_invertibility(2, 10, serial());
  INFO(failures(r));
  CHECK(r.passed);
  CHECK(r.graphs_tested == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  CHECK(r.summary.at("trees_n10") == "106");
  CHECK_THROWS_AS(check_star_invertibility(1, 5), ContractError);
  CHECK_THROWS_AS(check_star_invertibility(5, 13), ContractError);
}

TEST_CASE("diam2-max for n = 5 and 6") {
  for (int n : {5, 6}) {
    auto r = check_diam2_max(n, serial());
    INFO(failures(r));
    CHECK(r.passed);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].label == "star");
  }
  CHECK_THROWS_AS(check_diam2_max(8), ContractError);
  CHECK_THROWS_AS(check_diam2_max(3), ContractError);
}

TEST_CASE("bounds hold over every connected graph up to 6 vertices") {
  const auto u = Universe::exhaustive(1, 6, serial());
  for (auto check : {check_radius_lower_bound, check_wiener_bound, check_diam2_bound, check_quotient_bound,
                     check_domination}) {
    auto r = check(u, serial());
    INFO(r.check_id << "\n" << failures(r));
    CHECK(r.passed);
    CHECK(r.graphs_tested > 0);
  }
}

TEST_CASE("radius-lower-bound details") {
  auto u = Universe::exhaustive(1, 6, serial());
  auto r = check_radius_lower_bound(u, serial());
  CHECK(r.summary.at("skipped_diameter_below_2") == "6");  // K_1 .. K_6
  CHECK(std::stoi(r.summary.at("diametrical")) >= 2);      // C4 and C6 at least
}

TEST_CASE("a loose equality tolerance makes the radius check fail") {
  Settings s = serial();
  s.equality_tol = 1.5;  // rho(P4) = 4, d = 3
  auto r = check_radius_lower_bound(Universe::single(path(4), "P4"), s);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.counterexamples.empty());
}

TEST_CASE("wiener-bound equality on regular graphs") {
  auto r = check_wiener_bound(Universe::single(complete_bipartite(3, 3), "K33"), serial());
  CHECK(r.passed);
  CHECK(r.summary.at("eps_regular") == "1");
}

TEST_CASE("bipartite-min for 6 vertices") {
  auto r = check_bipartite_min(3, serial());
  INFO(failures(r));
  CHECK(r.passed);
  CHECK(std::abs(std::stod(r.summary.at("min_rho")) - 3) < 1e-9);
  CHECK(std::abs(std::stod(r.summary.at("rho_complete_bipartite")) - 4) < 1e-9);
  CHECK_THROWS_AS(check_bipartite_min(4), ContractError);
}

TEST_CASE("partite-energy closed forms") {
  auto r = check_partite_energy(6, 25, serial());
  INFO(failures(r));
  CHECK(r.passed);
  CHECK(r.graphs_tested == 15 + 25);
  CHECK_THROWS_AS(check_partite_energy(1, 0), ContractError);
}

TEST_CASE("random_multipartite_parts respects its limits") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto parts = random_multipartite_parts(seed);
    CHECK(parts.size() >= 2);
    int total = 0;
    for (int p : parts) {
      CHECK(p >= 2);
      total += p;
    }
    CHECK(total <= 60);
    CHECK(parts == random_multipartite_parts(seed));
  }
}

TEST_CASE("equienergetic search") {
  for (int n : {3, 4}) {
    auto r = search_equienergetic(n, serial());
    CHECK(r.passed);
    CHECK(r.pairs.empty());
  }
  auto r5 = search_equienergetic(5, serial());
  INFO(failures(r5));
  CHECK(r5.passed);
  CHECK_FALSE(r5.pairs.empty());
  bool saw_target = false;
  for (const auto& p : r5.pairs) saw_target |= std::abs(p.energy - (4 + 4 * std::sqrt(2.0))) < 1e-7;
  CHECK(saw_target);

  auto r6 = search_equienergetic(6, serial());
  INFO(failures(r6));
  CHECK(r6.passed);
  bool k24_k33 = false;
  for (const auto& p : r6.pairs) {
    if (p.exact_family) {
      CHECK(std::abs(p.energy - 16) < 1e-7);
      k24_k33 = true;
    }
  }
  CHECK(k24_k33);
  CHECK_THROWS_AS(search_equienergetic(2), ContractError);
}

TEST_CASE("reports are deterministic across thread counts") {
  auto u = Universe::exhaustive(1, 6, serial());
  Settings many = serial();
  many.jobs = 3;
  CHECK(scrubbed(check_quotient_bound(u, serial())) == scrubbed(check_quotient_bound(u, many)));
  CHECK(scrubbed(search_equienergetic(6, serial())) == scrubbed(search_equienergetic(6, many)));
  CHECK(scrubbed(check_star_invertibility(2, 9, serial())) == scrubbed(check_star_invertibility(2, 9, many)));
}

TEST_CASE("settings validation and environment overrides") {
  Settings s;
  CHECK_NOTHROW(s.validate());
  CHECK(s.effective_jobs() >= 1);
  s.equality_tol = 0;
  CHECK_THROWS_AS(s.validate(), ContractError);

  ::setenv("ECCSPEC_EQUALITY_TOL", "1e-7", 1);
  ::setenv("ECCSPEC_JOBS", "2", 1);
  ::setenv("ECCSPEC_ALLOW_LARGE", "1", 1);
  Settings env = settings_from_environment();
  CHECK(env.equality_tol == doctest::Approx(1e-7));
  CHECK(env.jobs == 2);
  CHECK(env.allow_large);
  ::setenv("ECCSPEC_JOBS", "many", 1);
  CHECK_THROWS_AS(settings_from_environment(), ContractError);
  ::unsetenv("ECCSPEC_EQUALITY_TOL");
  ::unsetenv("ECCSPEC_JOBS");
  ::unsetenv("ECCSPEC_ALLOW_LARGE");
}
