#pragma once

#include <cstdint>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(int n, std::vector<std::int64_t> row_major);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int order() const noexcept { return n_; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  bool is_symmetric() const;
  std::int64_t trace() const;
  /// Principal submatrix on the listed rows/columns, in the given order.
  IntMatrix principal(const std::vector<int>& idx) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Row sums of the eccentricity matrix plus the scalar indices built on them.
struct EpsilonProfile {
  std::vector<std::int64_t> degrees;
  std::int64_t wiener = 0;          // half the total entry sum of eps(G)
  std::int64_t classic_wiener = 0;  // W(G) from the distance matrix
  bool is_regular = false;
  int n = 0;
  int m = 0;  // edges
  int k = 0;  // vertices of degree n-1
};

IntMatrix distance_matrix(const Metric& metric);

/// Keeps d(u,v) where it equals min(e(u), e(v)); zero elsewhere.
IntMatrix eccentricity_matrix(const Metric& metric);

EpsilonProfile epsilon_profile(const Graph& g, const Metric& metric, const IntMatrix& eps);
EpsilonProfile epsilon_profile(const Graph& g, const IntMatrix& eps);

/// Every vertex has eccentricity diam and exactly one vertex at that distance.
bool is_diametrical(const Metric& metric);

bool is_epsilon_regular(const EpsilonProfile& profile);

}  // namespace eccspec
