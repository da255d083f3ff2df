#include "eccspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace eccspec {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

Json to_json(const Spectrum& s) {
  Json values = Json::array();
  for (double v : s.values) values.push_back(round12(v));
  Json groups = Json::array();
  for (const auto& [v, mult] : s.groups) groups.push_back({{"value", round12(v)}, {"multiplicity", mult}});
  return Json{{"eigenvalues", values},
              {"groups", groups},
              {"spectral_radius", round12(s.radius)},
              {"energy", round12(s.energy)}};
}

Json to_json(const CharPoly& p) { return p.to_strings(); }

Json to_json(const EpsilonProfile& p) {
  return Json{{"eps_degrees", p.degrees}, {"eps_wiener", p.wiener}, {"wiener", p.classic_wiener},
              {"eps_regular", p.is_regular}, {"n", p.n},        {"m", p.m},
              {"k_dominating", p.k}};
}

Json to_json(const CheckReport& r) {
  Json counter = Json::array();
  for (const auto& c : r.counterexamples)
    counter.push_back({{"graph6", c.graph6}, {"expected", c.expected}, {"actual", c.actual}});
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"graph6", w.graph6}, {"value", round12(w.value)}, {"label", w.label}});
  Json doc{{"check", r.check_id},
           {"universe", r.universe},
           {"graphs_tested", r.graphs_tested},
           {"passed", r.passed},
           {"counterexamples", counter},
           {"witnesses", witnesses}};
  if (!r.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
      pairs.push_back({{"first", p.first},
                       {"second", p.second},
                       {"energy", round12(p.energy)},
                       {"kind", p.exact_family ? "exact-family" : "candidate"}});
    }
    doc["pairs"] = pairs;
  }
  doc["summary"] = Json::object();
  for (const auto& [k, v] : r.summary) doc["summary"][k] = v;
  doc["wall_time_s"] = round12(r.wall_time_s);
  return doc;
}

Json compute_report(const Graph& g) {
  const Metric m = metric(g);
  const IntMatrix eps = eccentricity_matrix(m);
  const EpsilonProfile prof = epsilon_profile(g, m, eps);
  Json doc{{"graph6", to_graph6(g)},
           {"n", g.order()},
           {"m", g.size()},
           {"diameter", m.diam},
           {"radius", m.rad},
           {"eccentricities", m.ecc},
           {"eccentricity_matrix", to_json(eps)},
           {"distance_matrix", to_json(distance_matrix(m))}};
  const Json profile = to_json(prof);
  for (const auto& [k, v] : profile.items()) {
    if (k != "n" && k != "m") doc[k] = v;
  }
  doc["diametrical"] = is_diametrical(m);
  return doc;
}

Json spectrum_report(const Graph& g) {
  const IntMatrix eps = eccentricity_matrix(metric(g));
  const CharPoly poly = char_poly_exact(eps);
  Json doc{{"graph6", to_graph6(g)}, {"n", g.order()}};
  const Json spectrum = to_json(eigenvalues_sym(eps));
  for (const auto& [k, v] : spectrum.items()) doc[k] = v;
  doc["char_poly"] = to_json(poly);
  doc["char_poly_text"] = poly.pretty();
  doc["determinant"] = determinant_exact(eps).str();
  return doc;
}

Json bounds_report(const Graph& g) {
  const GraphFacts f = analyze(g, true);
  const int n = f.metric.n;
  Json doc{{"graph6", f.graph6},
           {"n", n},
           {"diameter", f.metric.diam},
           {"spectral_radius", round12(f.eps_spectrum.radius)},
           {"distance_spectral_radius", round12(f.dist_radius)},
           {"wiener_bound", round12(2.0 * static_cast<double>(f.profile.wiener) / n)}};
  if (f.metric.diam >= 2) doc["diameter_bound"] = f.metric.diam;
  if (f.metric.diam == 2) {
    const auto& p = f.profile;
    const std::int64_t num = 2 * (std::int64_t{n} * n - n - 2 * p.m) + std::int64_t{p.k} * (2 * n - p.k - 1);
    doc["diam2_bound"] = round12(static_cast<double>(num) / n);
  }
  if (n >= 2) {
    auto [mu, vertex] = max_quotient_bound(f.profile);
    doc["quotient_bound"] = round12(mu);
    doc["quotient_vertex"] = vertex + 1;
  }
  doc["diametrical"] = is_diametrical(f.metric);
  doc["eps_regular"] = f.profile.is_regular;
  return doc;
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ContractError("unknown format '" + name + "' (expected table, json or csv)");
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!is_scalar_array(row) || row.empty()) return false;
  return true;
}

bool is_record_list(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& x : v)
    if (!x.is_object()) return false;
  return true;
}

std::string join_scalars(const Json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? ", " : "") + scalar_text(arr[i]);
  return out + "]";
}

void render_table(const Json& obj, std::ostringstream& os, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) {
    const std::string pad(width - k.size() + 2, ' ');
    if (v.is_object()) {
      os << indent << k << ":\n";
      if (v.empty()) os << indent << "  (none)\n";
      render_table(v, os, indent + "  ");
    } else if (is_matrix(v)) {
      os << indent << k << ":\n";
      std::size_t cell = 1;
      for (const auto& row : v)
        for (const auto& x : row) cell = std::max(cell, scalar_text(x).size());
      for (const auto& row : v) {
        os << indent << " ";
        for (const auto& x : row) {
          auto s = scalar_text(x);
          os << ' ' << std::string(cell - s.size(), ' ') << s;
        }
        os << '\n';
      }
    } else if (is_record_list(v)) {
      os << indent << k << ":\n";
      std::vector<std::string> cols;
      for (const auto& rec : v)
        for (const auto& [ck, cv] : rec.items())
          if (std::find(cols.begin(), cols.end(), ck) == cols.end()) cols.push_back(ck);
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> widths;
      for (const auto& c : cols) widths.push_back(c.size());
      for (const auto& rec : v) {
        std::vector<std::string> row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::string s;
          if (rec.contains(cols[c])) {
            const auto& x = rec[cols[c]];
            s = x.is_array() ? join_scalars(x) : scalar_text(x);
          }
          widths[c] = std::max(widths[c], s.size());
          row.push_back(std::move(s));
        }
        cells.push_back(std::move(row));
      }
      auto emit = [&](const std::vector<std::string>& row) {
        os << indent << " ";
        for (std::size_t c = 0; c < row.size(); ++c) os << ' ' << row[c] << std::string(widths[c] - row[c].size(), ' ');
        os << '\n';
      };
      emit(cols);
      for (const auto& row : cells) emit(row);
    } else if (v.is_array()) {
      os << indent << k << pad << (v.empty() ? "(none)" : join_scalars(v)) << '\n';
    } else {
      os << indent << k << pad << scalar_text(v) << '\n';
    }
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, os);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << csv_escape(path) << ',' << csv_escape(scalar_text(v)) << '\n';
  }
}

}  // namespace

std::string render(const Json& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << doc.dump(2) << '\n';
      break;
    case Format::Csv:
      os << "field,value\n";
      if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) flatten(doc[i], "[" + std::to_string(i) + "]", os);
      } else {
        flatten(doc, "", os);
      }
      break;
    case Format::Table:
      if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
          if (i) os << '\n';
          render_table(doc[i], os, "");
        }
      } else {
        render_table(doc, os, "");
      }
      break;
  }
  return os.str();
}

}  // namespace eccspec
