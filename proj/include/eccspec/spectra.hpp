#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eccspec/ecc_matrix.hpp"

namespace eccspec {

using BigInt = boost::multiprecision::cpp_int;

/// Dense symmetric real matrix, row-major. Used for property tests on
/// matrices that are not integral.
struct RealMatrix {
  int n = 0;
  std::vector<double> a;

  RealMatrix() = default;
  explicit RealMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}
  explicit RealMatrix(const IntMatrix& m);
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  RealMatrix principal(const std::vector<int>& idx) const;
};

struct Spectrum {
  std::vector<double> values;                 // descending
  std::vector<std::pair<double, int>> groups;  // (value, multiplicity), descending
  double radius = 0.0;
  double energy = 0.0;
};

/// det(xI - M) = x^n + c[n-1] x^(n-1) + ... + c[0]; coeffs[i] multiplies x^i.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;
  long double evaluate(long double x) const;
  /// Sum of absolute coefficient values, as a float.
  long double l1_norm() const;
  std::vector<std::string> to_strings() const;
  /// Human-readable form such as "x^4 - 17x^2 + 16".
  std::string pretty() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

inline constexpr double kJacobiConvergence = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kClusterTolerance = 1e-8;

/// Cyclic-by-row Jacobi eigenvalue iteration on a private copy of m.
Spectrum eigenvalues_sym(const RealMatrix& m);
Spectrum eigenvalues_sym(const IntMatrix& m);

double spectral_radius(const Spectrum& s);
double energy(const Spectrum& s);

/// Groups sorted-descending values whose neighbours differ by at most
/// tol * max(1, |value|).
std::vector<std::pair<double, int>> cluster_eigenvalues(const std::vector<double>& descending,
                                                        double tol = kClusterTolerance);

/// Faddeev-LeVerrier over arbitrary-precision integers.
CharPoly char_poly_exact(const IntMatrix& m);

/// Bareiss fraction-free elimination over arbitrary-precision integers.
BigInt determinant_exact(const IntMatrix& m);

bool is_cospectral(const IntMatrix& a, const IntMatrix& b);

/// Largest eigenvalue of the 2x2 quotient of eps(G) for the partition
/// {v_i} | V - {v_i}, in closed form.
double quotient_bound(const EpsilonProfile& profile, int i, int n);
/// Maximum of quotient_bound over all vertices, with the first maximizing vertex.
std::pair<double, int> max_quotient_bound(const EpsilonProfile& profile);

/// Cauchy interlacing between m and its principal submatrix on `subset`.
bool interlacing_check(const RealMatrix& m, const std::vector<int>& subset, double tol = 1e-9);
bool interlacing_check(const IntMatrix& m, const std::vector<int>& subset, double tol = 1e-9);

/// |p(lambda)| <= tol * ||p||_1 * max(1, |lambda|)^n.
bool is_approximate_root(const CharPoly& p, double lambda, double tol = 1e-6);

}  // namespace eccspec
