#include "eccspec/ecc_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace eccspec {

IntMatrix::IntMatrix(int n, std::vector<std::int64_t> row_major) : n_(n), data_(std::move(row_major)) {
  if (n < 0 || data_.size() != static_cast<std::size_t>(n) * n) {
    throw ContractError("matrix data size does not match order " + std::to_string(n));
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw ContractError("matrix is not square");
    data.insert(data.end(), r.begin(), r.end());
  }
  return IntMatrix(n, std::move(data));
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::principal(const std::vector<int>& idx) const {
  const int m = static_cast<int>(idx.size());
  IntMatrix sub(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub(a, b) = (*this)(idx[a], idx[b]);
  return sub;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                  data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  return out;
}

IntMatrix distance_matrix(const Metric& metric) {
  std::vector<std::int64_t> data(metric.dist.begin(), metric.dist.end());
  return IntMatrix(metric.n, std::move(data));
}

IntMatrix eccentricity_matrix(const Metric& metric) {
  const int n = metric.n;
  IntMatrix eps(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int d = metric(u, v);
      if (u != v && d == std::min(metric.ecc[u], metric.ecc[v])) eps(u, v) = d;
    }
  }
  return eps;
}

EpsilonProfile epsilon_profile(const Graph& g, const Metric& metric, const IntMatrix& eps) {
  const int n = eps.order();
  if (n != g.order() || metric.n != n) throw ContractError("profile inputs disagree on order");
  EpsilonProfile p;
  p.n = n;
  p.m = static_cast<int>(g.size());
  p.degrees.assign(n, 0);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) p.degrees[i] += eps(i, j);
    total += p.degrees[i];
  }
  if (total % 2 != 0) throw InvariantError("eccentricity matrix entry total is odd");
  p.wiener = total / 2;

  std::int64_t dist_total = std::accumulate(metric.dist.begin(), metric.dist.end(), std::int64_t{0});
  p.classic_wiener = dist_total / 2;

  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) ++p.k;
  p.is_regular = std::adjacent_find(p.degrees.begin(), p.degrees.end(),
                                    std::not_equal_to<>()) == p.degrees.end();
  return p;
}

EpsilonProfile epsilon_profile(const Graph& g, const IntMatrix& eps) {
  return epsilon_profile(g, metric(g), eps);
}

bool is_diametrical(const Metric& metric) {
  const int n = metric.n;
  if (n < 2) return false;
  for (int u = 0; u < n; ++u) {
    if (metric.ecc[u] != metric.diam) return false;
    int attained = 0;
    for (int v = 0; v < n; ++v)
      if (metric(u, v) == metric.ecc[u]) ++attained;
    if (attained != 1) return false;
  }
  return true;
}

bool is_epsilon_regular(const EpsilonProfile& profile) { return profile.is_regular; }

}  // namespace eccspec
