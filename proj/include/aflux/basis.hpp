#ifndef AFLUX_BASIS_HPP_
#define AFLUX_BASIS_HPP_

// Dual shape functions of the hybrid point-value / moment finite element.
//
// Degrees of freedom on the reference cell xi in [-1/2, 1/2], in storage order:
//   index 0      sigma_{+1/2}(v) = v(+1/2)
//   index 1      sigma_{-1/2}(v) = v(-1/2)
//   index 2 + k  sigma_k(v)      = int W_k(xi) v(xi) dxi,   k = 0 .. N-2
// For the monomial family W_k(xi) = (k+1) 2^k xi^k, which makes sigma_k(1) = 1
// for even k and 0 for odd k, and keeps every functional free of dx.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aflux/polynomial.hpp"

namespace aflux {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kRightPoint = 0;
inline constexpr std::size_t kLeftPoint = 1;
inline constexpr std::size_t moment_index(int k) { return 2 + static_cast<std::size_t>(k); }

/// Weight polynomials W_k (exact, ascending coefficients) defining the moment
/// functionals. `monomial` marks the family for which the closed-form linear
/// volume term holds.
struct MomentFamily {
  std::vector<std::vector<Rational>> weights;
  bool monomial = false;
};

inline MomentFamily monomial_family(int degree) {
  MomentFamily family;
  family.monomial = true;
  for (int k = 0; k <= degree - 2; ++k) {
    std::vector<Rational> w(static_cast<std::size_t>(k) + 1, Rational(0));
    w[static_cast<std::size_t>(k)] = Rational((k + 1) * (1 << k));
    family.weights.push_back(std::move(w));
  }
  return family;
}

namespace detail {

inline Rational half_power(int j) {
  Rational r(1);
  for (int l = 0; l < j; ++l) r /= 2;
  return r;
}

// int_{-1/2}^{1/2} xi^n dxi
inline Rational exact_monomial_integral(int n) {
  if (n % 2 != 0) return Rational(0);
  return half_power(n) / (n + 1);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Polynomial to_polynomial(const std::vector<Rational>& c) {
  std::vector<double> d(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) d[j] = to_double(c[j]);
  return Polynomial(std::move(d));
}

// Legendre polynomials P_0 .. P_n in s, as exact monomial coefficients.
inline std::vector<std::vector<Rational>> legendre_table(std::size_t n) {
  std::vector<std::vector<Rational>> p(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  p[0][0] = 1;
  if (n >= 1) p[1][1] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    const Rational a(static_cast<long long>(2 * j + 1), static_cast<long long>(j + 1));
    const Rational b(static_cast<long long>(j), static_cast<long long>(j + 1));
    for (std::size_t l = 0; l <= n; ++l) {
      Rational v = -b * p[j - 1][l];
      if (l >= 1) v += a * p[j][l - 1];
      p[j + 1][l] = v;
    }
  }
  return p;
}

// Coefficients a_j with sum_j c_j xi^j = sum_j a_j P_j(2 xi).
inline std::vector<Rational> monomial_to_legendre(const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = c[j] * half_power(static_cast<int>(j));
  const auto p = legendre_table(n == 0 ? 0 : n - 1);
  std::vector<Rational> a(n, Rational(0));
  for (std::size_t j = n; j-- > 0;) {
    a[j] = d[j] / p[j][j];
    for (std::size_t l = 0; l <= j; ++l) d[l] -= a[j] * p[j][l];
  }
  return a;
}

// Gauss-Jordan inverse in exact arithmetic.
inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("duality matrix is singular: invalid functional set");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

class BasisSet {
 public:
  BasisSet(int degree, const MomentFamily& family) : degree_(degree), monomial_(family.monomial) {
    if (degree < 2 || degree > 15)
      throw std::invalid_argument("basis degree must lie in [2, 15], got " + std::to_string(degree));
    if (family.weights.size() != static_cast<std::size_t>(degree - 1))
      throw std::invalid_argument("moment family must provide N-1 weight functions");
    const std::size_t n = num_dofs();

    // duality[r][j] = sigma_r(xi^j)
    std::vector<std::vector<Rational>> duality(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const int jj = static_cast<int>(j);
      duality[kRightPoint][j] = detail::half_power(jj);
      duality[kLeftPoint][j] = (jj % 2 == 0 ? 1 : -1) * detail::half_power(jj);
      for (int k = 0; k <= degree - 2; ++k) {
        Rational s(0);
        const auto& w = family.weights[static_cast<std::size_t>(k)];
        for (std::size_t l = 0; l < w.size(); ++l) s += w[l] * detail::exact_monomial_integral(static_cast<int>(l) + jj);
        duality[moment_index(k)][j] = s;
      }
    }

    // Column s of the inverse holds the coefficients of B_s.
    const auto inv = detail::invert(duality);
    shape_exact_.assign(n, std::vector<Rational>(n));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t j = 0; j < n; ++j) shape_exact_[s][j] = inv[j][s];
    for (const auto& c : shape_exact_) shape_.push_back(detail::to_polynomial(c));

    for (const auto& w : family.weights) {
      weights_.push_back(detail::to_polynomial(w));
      weight_derivatives_.push_back(derivative(weights_.back()));
    }

    // Row-major (N+1)x(N+1) tables: coefficient of xi^j, resp. P_j(2 xi), in B_r.
    recon_matrix_.resize(n * n);
    legendre_matrix_.resize(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto leg = detail::monomial_to_legendre(shape_exact_[r]);
      for (std::size_t j = 0; j < n; ++j) {
        recon_matrix_[j * n + r] = shape_[r][j];
        legendre_matrix_[j * n + r] = detail::to_double(leg[j]);
      }
    }
  }

  int degree() const { return degree_; }
  std::size_t num_dofs() const { return static_cast<std::size_t>(degree_) + 1; }
  int num_moments() const { return degree_ - 1; }
  bool is_monomial() const { return monomial_; }

  const Polynomial& shape(std::size_t r) const { return shape_.at(r); }
  const std::vector<Rational>& shape_exact(std::size_t r) const { return shape_exact_.at(r); }
  const Polynomial& weight(int k) const { return weights_.at(static_cast<std::size_t>(k)); }
  const Polynomial& weight_derivative(int k) const { return weight_derivatives_.at(static_cast<std::size_t>(k)); }

  /// Normalization (k+1) 2^k of the monomial family.
  static double a_tilde(int k) { return static_cast<double>((k + 1) * (1 << k)); }

  /// sigma_k(v), exact from the coefficients of v.
  double moment_functional(int k, const Polynomial& v) const {
    if (k < 0 || k > degree_ - 2) throw std::out_of_range("moment index out of range");
    return cell_integral(weight(k) * v);
  }

  /// sigma_r(v) for any dof index r.
  double functional(std::size_t r, const Polynomial& v) const {
    if (r == kRightPoint) return v(0.5);
    if (r == kLeftPoint) return v(-0.5);
    return moment_functional(static_cast<int>(r) - 2, v);
  }

  /// Correctly rounded B_r(xi), evaluated in exact arithmetic.
  double shape_value(std::size_t r, double xi) const {
    const Rational x(xi);
    Rational v(0);
    const auto& c = shape_exact_.at(r);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return detail::to_double(v);
  }

  /// Legendre coefficients (in s = 2 xi) of the reconstruction from `dofs`.
  /// This representation stays well conditioned for high degree.
  void legendre_coefficients(std::span<const double> dofs, std::span<double> out) const {
    const std::size_t n = num_dofs();
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += legendre_matrix_[j * n + r] * dofs[r];
      out[j] = s;
    }
  }

  /// Value of the reconstruction from `dofs` at xi.
  double evaluate(std::span<const double> dofs, double xi) const {
    double a[16];
    const std::size_t n = num_dofs();
    legendre_coefficients(dofs, std::span<double>(a, n));
    return legendre_series(std::span<const double>(a, n), xi);
  }

  /// sum_j a_j P_j(2 xi) by the three-term recurrence.
  static double legendre_series(std::span<const double> a, double xi) {
    const double s = 2.0 * xi;
    double p_prev = 1.0, p = s;
    double sum = a[0];
    if (a.size() > 1) sum += a[1] * s;
    for (std::size_t j = 1; j + 1 < a.size(); ++j) {
      const double p_next = ((2.0 * j + 1.0) * s * p - static_cast<double>(j) * p_prev) / static_cast<double>(j + 1);
      p_prev = p;
      p = p_next;
      sum += a[j + 1] * p;
    }
    return sum;
  }

  Polynomial reconstruct(std::span<const double> dofs) const {
    const std::size_t n = num_dofs();
    if (dofs.size() != n) throw std::invalid_argument("reconstruct: expected N+1 degrees of freedom");
    std::vector<double> c(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += recon_matrix_[j * n + r] * dofs[r];
      c[j] = s;
    }
    return Polynomial(std::move(c));
  }

 private:
  int degree_;
  bool monomial_;
  std::vector<std::vector<Rational>> shape_exact_;
  std::vector<Polynomial> shape_;
  std::vector<Polynomial> weights_;
  std::vector<Polynomial> weight_derivatives_;
  std::vector<double> recon_matrix_;
  std::vector<double> legendre_matrix_;
};

inline BasisSet build_basis(int degree) {
  if (degree < 2 || degree > 8) throw std::invalid_argument("basis degree must lie in [2, 8], got " + std::to_string(degree));
  return BasisSet(degree, monomial_family(degree));
}

inline double moment_functional(const BasisSet& basis, int k, const Polynomial& v) {
  return basis.moment_functional(k, v);
}

inline Polynomial reconstruct(const BasisSet& basis, std::span<const double> dofs) {
  return basis.reconstruct(dofs);
}

}  // namespace aflux

#endif  // AFLUX_BASIS_HPP_
