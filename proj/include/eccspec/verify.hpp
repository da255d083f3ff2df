#pragma once

#include <map>
#include <string>
#include <vector>

#include "eccspec/config.hpp"
#include "eccspec/ecc_matrix.hpp"
#include "eccspec/generators.hpp"
#include "eccspec/graph.hpp"
#include "eccspec/spectra.hpp"

namespace eccspec {

struct Counterexample {
  std::string graph6;
  std::string expected;
  std::string actual;
};

struct Witness {
  std::string graph6;
  double value = 0.0;
  std::string label;
};

/// Two non-cospectral graphs whose eps-energies fall in one bucket.
struct EquienergeticPair {
  std::string first;   // graph6
  std::string second;  // graph6
  double energy = 0.0;
  /// Both graphs are complete multipartite with parts >= 2 and the same
  /// number of parts, so equality follows from the closed form 4(n - k).
  bool exact_family = false;
};

/// Outcome of one claim checked over one universe of graphs.
struct CheckReport {
  std::string check_id;
  std::string universe;
  std::size_t graphs_tested = 0;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  std::vector<Witness> witnesses;
  std::vector<EquienergeticPair> pairs;
  std::map<std::string, std::string> summary;
  double wall_time_s = 0.0;

  void add_counterexample(std::string graph6, std::string expected, std::string actual) {
    counterexamples.push_back({std::move(graph6), std::move(expected), std::move(actual)});
    passed = false;
  }
};

struct Universe {
  std::string description;
  std::vector<Graph> graphs;

  /// Every connected graph with n_min <= n <= n_max, in enumeration order.
  static Universe exhaustive(int n_min, int n_max, const Settings& settings = {});
  static Universe single(const Graph& g, std::string description);
};

/// Everything the checks need about one connected graph.
struct GraphFacts {
  std::string graph6;
  Metric metric;
  IntMatrix eps;
  IntMatrix dist;
  EpsilonProfile profile;
  Spectrum eps_spectrum;
  double dist_radius = 0.0;
};

GraphFacts analyze(const Graph& g, bool with_distance_spectrum = false);

// Tree eps-matrix invertible iff star (P4 excepted); star determinant formula.
CheckReport check_star_invertibility(int n_min, int n_max, const Settings& settings = {});
// Star uniquely maximizes rho(eps) among diameter-2 graphs on n vertices.
CheckReport check_diam2_max(int n, const Settings& settings = {});
// rho(eps) >= d with equality exactly for diametrical graphs.
CheckReport check_radius_lower_bound(const Universe& universe, const Settings& settings = {});
// Crown W_{n,n} minimizes rho(eps) over connected bipartite graphs on 2n vertices.
CheckReport check_bipartite_min(int half_n, const Settings& settings = {});
// rho(eps) >= 2 W_eps / n with equality exactly for eps-regular graphs.
CheckReport check_wiener_bound(const Universe& universe, const Settings& settings = {});
// Diameter-2 bound via n, m and the number of dominating vertices.
CheckReport check_diam2_bound(const Universe& universe, const Settings& settings = {});
// rho(eps) >= max_i mu_1(i) from the vertex/rest quotient.
CheckReport check_quotient_bound(const Universe& universe, const Settings& settings = {});
// Closed-form spectra and energies of complete bipartite / multipartite graphs.
CheckReport check_partite_energy(int p_max, int parts_samples, const Settings& settings = {});
// Non-cospectral eps-equienergetic pairs among connected graphs on n vertices.
CheckReport search_equienergetic(int n, const Settings& settings = {});
CheckReport search_equienergetic(const Universe& universe, int n, const Settings& settings = {});
// rho(eps) <= rho(D) since eps is entrywise dominated by D.
CheckReport check_domination(const Universe& universe, const Settings& settings = {});

/// Stable check identifiers used by the CLI and the Python module.
const std::vector<std::string>& check_ids();

/// Random multipartite part sizes: k >= 2 parts, each >= 2, total <= max_n.
std::vector<int> random_multipartite_parts(std::uint64_t seed, int max_n = 60);

}  // namespace eccspec
