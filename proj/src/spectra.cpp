#include "eccspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace eccspec {

RealMatrix::RealMatrix(const IntMatrix& m) : n(m.order()), a(m.data().begin(), m.data().end()) {}

RealMatrix RealMatrix::principal(const std::vector<int>& idx) const {
  const int k = static_cast<int>(idx.size());
  RealMatrix sub(k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) sub(x, y) = (*this)(idx[x], idx[y]);
  return sub;
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double CharPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

long double CharPoly::l1_norm() const {
  long double s = 0;
  for (const auto& c : coeffs) s += boost::multiprecision::abs(c).convert_to<long double>();
  return s;
}

std::vector<std::string> CharPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.str());
  return out;
}

std::string CharPoly::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

double frobenius(const RealMatrix& m) {
  double s = 0;
  for (double x : m.a) s += x * x;
  return std::sqrt(s);
}

double off_diagonal(const RealMatrix& m) {
  double s = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

void rotate(RealMatrix& a, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (int r = 0; r < a.n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = c * arp - s * arq;
    a(r, q) = a(q, r) = s * arp + c * arq;
  }
}

}  // namespace

std::vector<std::pair<double, int>> cluster_eigenvalues(const std::vector<double>& descending,
                                                        double tol) {
  std::vector<std::pair<double, int>> groups;
  double sum = 0;
  double prev = 0;
  for (double v : descending) {
    if (!groups.empty() && std::abs(prev - v) <= tol * std::max(1.0, std::abs(prev))) {
      ++groups.back().second;
      sum += v;
      groups.back().first = sum / groups.back().second;
    } else {
      groups.emplace_back(v, 1);
      sum = v;
    }
    prev = v;
  }
  return groups;
}

Spectrum eigenvalues_sym(const RealMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m(i, j) != m(j, i)) throw ContractError("eigenvalues_sym: matrix is not symmetric");

  RealMatrix a = m;
  const double threshold = kJacobiConvergence * (1.0 + frobenius(m));
  int sweep = 0;
  while (off_diagonal(a) > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw NumericError("Jacobi iteration did not converge in " +
                         std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < a.n; ++p)
      for (int q = p + 1; q < a.n; ++q) rotate(a, p, q);
  }

  Spectrum s;
  s.values.resize(a.n);
  for (int i = 0; i < a.n; ++i) s.values[i] = a(i, i);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  s.groups = cluster_eigenvalues(s.values);
  s.radius = s.values.empty() ? 0.0 : s.values.front();
  for (double v : s.values) s.energy += std::abs(v);
  return s;
}

Spectrum eigenvalues_sym(const IntMatrix& m) {
  if (!m.is_symmetric()) throw ContractError("eigenvalues_sym: matrix is not symmetric");
  return eigenvalues_sym(RealMatrix(m));
}

double spectral_radius(const Spectrum& s) { return s.radius; }
double energy(const Spectrum& s) { return s.energy; }

CharPoly char_poly_exact(const IntMatrix& m) {
  const int n = m.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  // M holds the adjugate-style accumulator M_k; starts at M_1 = I.
  std::vector<BigInt> acc(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1;
  std::vector<BigInt> prod(acc.size());
  for (int k = 1; k <= n; ++k) {
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
          const auto a = m(i, l);
          if (a != 0) s += acc[static_cast<std::size_t>(l) * n + j] * a;
        }
        prod[static_cast<std::size_t>(i) * n + j] = std::move(s);
      }
      tr += prod[static_cast<std::size_t>(i) * n + i];
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(BigInt(-tr), BigInt(k), q, r);
    if (r != 0) throw InvariantError("Faddeev-LeVerrier: inexact division at step " + std::to_string(k));
    c[n - k] = q;
    acc.swap(prod);
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] += c[n - k];
  }
  return CharPoly{std::move(c)};
}

BigInt determinant_exact(const IntMatrix& m) {
  const int n = m.order();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        BigInt q, r;
        boost::multiprecision::divide_qr(num, prev, q, r);
        if (r != 0) throw InvariantError("Bareiss: inexact division");
        a[i][j] = std::move(q);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_cospectral(const IntMatrix& a, const IntMatrix& b) {
  if (a.order() != b.order()) throw ContractError("is_cospectral: matrices differ in order");
  return char_poly_exact(a) == char_poly_exact(b);
}

double quotient_bound(const EpsilonProfile& profile, int i, int n) {
  if (n < 2) throw ContractError("quotient_bound needs n >= 2");
  const long double eps_i = static_cast<long double>(profile.degrees.at(i));
  const long double rest = static_cast<long double>(profile.wiener) - eps_i;
  const long double root = std::sqrt(rest * rest + (n - 1) * eps_i * eps_i);
  return static_cast<double>((rest + root) / (n - 1));
}

std::pair<double, int> max_quotient_bound(const EpsilonProfile& profile) {
  const int n = static_cast<int>(profile.degrees.size());
  std::pair<double, int> best{-1.0, -1};
  for (int i = 0; i < n; ++i) {
    double b = quotient_bound(profile, i, n);
    if (b > best.first) best = {b, i};
  }
  return best;
}

bool interlacing_check(const RealMatrix& m, const std::vector<int>& subset, double tol) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractError("interlacing_check: subset has repeated vertices");
  }
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= m.n)) {
    throw ContractError("interlacing_check: subset index out of range");
  }
  const int n = m.n;
  const int k = static_cast<int>(subset.size());
  if (k == 0) return true;

  auto full = eigenvalues_sym(m).values;
  auto sub = eigenvalues_sym(m.principal(subset)).values;
  std::reverse(full.begin(), full.end());  // ascending
  std::reverse(sub.begin(), sub.end());
  for (int i = 0; i < k; ++i) {
    if (full[i] > sub[i] + tol) return false;
    if (sub[i] > full[i + n - k] + tol) return false;
  }
  return true;
}

bool interlacing_check(const IntMatrix& m, const std::vector<int>& subset, double tol) {
  return interlacing_check(RealMatrix(m), subset, tol);
}

bool is_approximate_root(const CharPoly& p, double lambda, double tol) {
  const long double value = std::abs(p.evaluate(static_cast<long double>(lambda)));
  const long double scale =
      p.l1_norm() * std::pow(std::max(1.0L, std::abs(static_cast<long double>(lambda))), p.degree());
  return value <= tol * scale;
}

}  // namespace eccspec
