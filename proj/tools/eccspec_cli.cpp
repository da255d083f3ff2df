#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "eccspec/report.hpp"
#include "eccspec/verify.hpp"

using namespace eccspec;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;

constexpr const char* kFamilyHelp =
    "Family specs use name:params, e.g. star:5, path:4, cycle:6, complete:4,\n"
    "complete_bipartite:2,3 (alias bipartite), multipartite:2,2,2, crown:4,\n"
    "random:n,edge_prob,seed.";

struct Options {
  std::string file;
  std::string graph6;
  std::string family;
  std::string format = "table";
  std::string out;
  std::optional<int> jobs;
  std::optional<double> equality_tol, tightness_tol, energy_tol, bucket_tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir;
  bool allow_large = false;

  // generate
  std::optional<int> trees, connected;

  // verify / search
  std::vector<std::string> checks;
  bool all = false;
  std::string n_range;
  std::optional<int> exhaustive;
  int half_n = 3;
  int p_max = 20;
  int samples = 50;
};

Settings build_settings(const Options& o) {
  Settings s = settings_from_environment();
  if (o.jobs) s.jobs = *o.jobs;
  if (o.equality_tol) s.equality_tol = *o.equality_tol;
  if (o.tightness_tol) s.tightness_tol = *o.tightness_tol;
  if (o.energy_tol) s.energy_tol = *o.energy_tol;
  if (o.bucket_tol) s.bucket_tol = *o.bucket_tol;
  if (o.seed) s.seed = *o.seed;
  if (o.cache_dir) s.cache_dir = *o.cache_dir;
  if (o.allow_large) s.allow_large = true;
  s.validate();
  return s;
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

bool has_input(const Options& o) { return !o.file.empty() || !o.graph6.empty() || !o.family.empty(); }

/// Graphs named by --file, --graph6 or --family; graph6 lines on stdin otherwise.
std::vector<Graph> read_input(const Options& o) {
  const int sources = !o.file.empty() + !o.graph6.empty() + !o.family.empty();
  if (sources > 1) throw CLI::ValidationError("input", "give exactly one of --file, --graph6, --family");
  if (!o.graph6.empty()) return {parse_graph6(o.graph6)};
  if (!o.family.empty()) return {make_family(parse_family_spec(o.family))};
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open '" + o.file + "'");
    const std::string text = read_all(in);
    if (o.file.size() > 3 && o.file.compare(o.file.size() - 3, 3, ".g6") == 0) return parse_graph6_lines(text);
    return {parse_edge_list(text)};
  }
  if (isatty(STDIN_FILENO)) throw CLI::ValidationError("input", "no input: give --file, --graph6, --family or pipe graph6 lines");
  auto graphs = parse_graph6_lines(read_all(std::cin));
  if (graphs.empty()) throw ParseError("no graph6 lines on stdin");
  return graphs;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ContractError("cannot write '" + o.out + "'");
  f << text;
}

Json per_graph(const std::vector<Graph>& graphs, Json (*build)(const Graph&)) {
  if (graphs.size() == 1) return build(graphs.front());
  Json docs = Json::array();
  for (const auto& g : graphs) docs.push_back(build(g));
  return docs;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw CLI::ValidationError("--n", "expected N or A..B, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const auto range = std::make_pair(to_int(text.substr(0, dots)), to_int(text.substr(dots + 2)));
  if (range.first > range.second) throw CLI::ValidationError("--n", "empty range '" + text + "'");
  return range;
}

std::vector<CheckReport> run_check(const std::string& id, const Options& o, const Settings& s) {
  std::optional<std::pair<int, int>> range;
  if (!o.n_range.empty()) range = parse_range(o.n_range);

  auto universe = [&]() -> Universe {
    if (has_input(o)) {
      auto graphs = read_input(o);
      Universe u;
      u.description = graphs.size() == 1 ? to_graph6(graphs.front()) : std::to_string(graphs.size()) + " input graphs";
      u.graphs = std::move(graphs);
      return u;
    }
    if (range) return Universe::exhaustive(range->first, range->second, s);
    return Universe::exhaustive(1, o.exhaustive.value_or(s.exhaustive_max), s);
  };

  std::vector<CheckReport> out;
  if (id == "star-invertibility") {
    const auto [lo, hi] = range.value_or(std::make_pair(5, 10));
    out.push_back(check_star_invertibility(lo, hi, s));
  } else if (id == "diam2-max") {
    const auto [lo, hi] = range.value_or(std::make_pair(4, o.exhaustive.value_or(s.exhaustive_max)));
    for (int n = lo; n <= hi; ++n) out.push_back(check_diam2_max(n, s));
  } else if (id == "radius-lower-bound") {
    out.push_back(check_radius_lower_bound(universe(), s));
  } else if (id == "bipartite-min") {
    out.push_back(check_bipartite_min(o.half_n, s));
  } else if (id == "wiener-bound") {
    out.push_back(check_wiener_bound(universe(), s));
  } else if (id == "diam2-bound") {
    out.push_back(check_diam2_bound(universe(), s));
  } else if (id == "quotient-bound") {
    out.push_back(check_quotient_bound(universe(), s));
  } else if (id == "partite-energy") {
    out.push_back(check_partite_energy(o.p_max, o.samples, s));
  } else if (id == "equienergetic") {
    const auto [lo, hi] = range.value_or(std::make_pair(3, 6));
    for (int n = lo; n <= hi; ++n) out.push_back(search_equienergetic(n, s));
  } else if (id == "domination") {
    out.push_back(check_domination(universe(), s));
  } else {
    throw CLI::ValidationError("check", "unknown check id '" + id + "'");
  }
  return out;
}

int report_checks(const Options& o, const std::vector<CheckReport>& reports) {
  bool all_passed = true;
  Json docs = Json::array();
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed;
    std::fprintf(stderr, "%s %s (%zu graphs, %.2fs)\n", r.passed ? "PASS" : "FAIL", r.check_id.c_str(),
                 r.graphs_tested, r.wall_time_s);
    docs.push_back(to_json(r));
  }
  emit(o, render(docs.size() == 1 ? docs.front() : docs, parse_format(o.format)));
  return all_passed ? 0 : kExitFailedCheck;
}

void add_input_options(CLI::App* cmd, Options& o) {
  auto* group = cmd->add_option_group("input");
  group->add_option("--file", o.file, "Edge-list file (first line may give the vertex count); *.g6 holds graph6 lines");
  group->add_option("--graph6", o.graph6, "Inline graph6 string");
  group->add_option("--family", o.family, "Named family, e.g. star:5");
  group->require_option(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Eccentricity matrices of graphs: invariants, spectra and bound checks.", "eccspec"};
  app.footer(std::string(kFamilyHelp) + "\nWith no input flag, graph6 lines are read from stdin.");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", o.out, "Write the report to this file instead of stdout");
  app.add_option("--jobs", o.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--equality-tol", o.equality_tol, "Tolerance for rho = bound decisions")->check(CLI::PositiveNumber);
  app.add_option("--tightness-tol", o.tightness_tol, "Tolerance for tightness witnesses")->check(CLI::PositiveNumber);
  app.add_option("--energy-tol", o.energy_tol, "Tolerance for closed-form energies")->check(CLI::PositiveNumber);
  app.add_option("--bucket-tol", o.bucket_tol, "Energy bucket width")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled families");
  app.add_option("--cache-dir", o.cache_dir, "Directory for enumerated graph corpora");
  app.add_flag("--allow-large", o.allow_large, "Permit n = 8 enumeration (slow)");

  auto* compute = app.add_subcommand("compute", "Eccentricity matrix, distance matrix and profile");
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum, energy, characteristic polynomial, determinant");
  auto* bounds = app.add_subcommand("bounds", "Spectral radius next to its lower bounds");
  for (auto* cmd : {compute, spectrum, bounds}) add_input_options(cmd, o);

  auto* generate = app.add_subcommand("generate", "Write graph6 lines for a family or an enumerated corpus");
  auto* gen_group = generate->add_option_group("source");
  gen_group->add_option("--family", o.family, "Named family, e.g. crown:4");
  gen_group->add_option("--trees", o.trees, "All non-isomorphic trees on N vertices");
  gen_group->add_option("--connected", o.connected, "All non-isomorphic connected graphs on N vertices");
  gen_group->require_option(1);

  auto* verify = app.add_subcommand("verify", "Run named checks; exit 0 iff every check passes");
  std::string ids_help = "Check ids:";
  for (const auto& id : check_ids()) ids_help += " " + id;
  verify->add_option("checks", o.checks, ids_help);
  verify->add_flag("--all", o.all, "Run every check at its default scale");
  verify->add_option("--n", o.n_range, "Order or order range A..B");
  verify->add_option("--exhaustive", o.exhaustive, "Universe of all connected graphs with n <= N")
      ->check(CLI::Range(1, kMaxConnectedOrderOverride));
  verify->add_option("--half-n", o.half_n, "bipartite-min: half the order");
  verify->add_option("--p-max", o.p_max, "partite-energy: largest part size");
  verify->add_option("--samples", o.samples, "partite-energy: random multipartite samples");
  add_input_options(verify, o);

  auto* search = app.add_subcommand("search", "Search for eps-equienergetic, non-cospectral pairs");
  search->add_option("--n", o.n_range, "Order or order range A..B")->required();

  try {
    app.parse(argc, argv);
    if (verify->parsed()) {
      if (o.all) o.checks = check_ids();
      if (o.checks.empty()) throw CLI::ValidationError("checks", "name at least one check id or pass --all");
      for (const auto& id : o.checks) {
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
          throw CLI::ValidationError("checks", "unknown check id '" + id + "'");
      }
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Settings settings = build_settings(o);
    const Format format = parse_format(o.format);

    if (compute->parsed()) {
      emit(o, render(per_graph(read_input(o), compute_report), format));
    } else if (spectrum->parsed()) {
      emit(o, render(per_graph(read_input(o), spectrum_report), format));
    } else if (bounds->parsed()) {
      emit(o, render(per_graph(read_input(o), bounds_report), format));
    } else if (generate->parsed()) {
      std::vector<Graph> graphs;
      if (!o.family.empty()) graphs.push_back(make_family(parse_family_spec(o.family)));
      if (o.trees) graphs = tree_corpus(*o.trees, settings.cache_dir);
      if (o.connected) graphs = connected_graph_corpus(*o.connected, settings.cache_dir, settings.allow_large);
      std::string text;
      if (format == Format::Json) {
        Json arr = Json::array();
        for (const auto& g : graphs) arr.push_back(to_graph6(g));
        text = arr.dump(2) + "\n";
      } else {
        for (const auto& g : graphs) text += to_graph6(g) + "\n";
      }
      emit(o, text);
    } else if (verify->parsed()) {
      std::vector<CheckReport> reports;
      for (const auto& id : o.checks) {
        std::fprintf(stderr, "running %s\n", id.c_str());
        for (auto& r : run_check(id, o, settings)) reports.push_back(std::move(r));
      }
      return report_checks(o, reports);
    } else if (search->parsed()) {
      const auto [lo, hi] = parse_range(o.n_range);
      std::vector<CheckReport> reports;
      for (int n = lo; n <= hi; ++n) reports.push_back(search_equienergetic(n, settings));
      return report_checks(o, reports);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const DisconnectedError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitInputError;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return 0;
}
