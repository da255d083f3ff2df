#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/spectra.hpp"
#include "eccspec/verify.hpp"

namespace eccspec {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits, the precision used for every float in
/// serialized reports.
double round12(double x);

Json to_json(const IntMatrix& m);
Json to_json(const Spectrum& s);
Json to_json(const CharPoly& p);
Json to_json(const EpsilonProfile& p);
Json to_json(const CheckReport& r);

/// Invariants of one graph: matrices, profile, metric, predicates.
Json compute_report(const Graph& g);
/// Spectrum, energy, exact characteristic polynomial and determinant of eps(G).
Json spectrum_report(const Graph& g);
/// The lower bounds on rho(eps(G)) next to rho itself.
Json bounds_report(const Graph& g);

enum class Format { Table, Json, Csv };
Format parse_format(const std::string& name);

/// Renders one document. Table and CSV flatten the same fields the JSON
/// carries, so all three formats agree field-for-field.
std::string render(const Json& doc, Format format);

}  // namespace eccspec
