#ifndef AFLUX_POLYNOMIAL_HPP_
#define AFLUX_POLYNOMIAL_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace aflux {

/// Polynomial in the dimensionless cell coordinate xi = (x - x_i) / dx.
/// Coefficients are stored in ascending order: p(xi) = sum_j c_j xi^j.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {}
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : 0.0; }

  /// Degree ignoring trailing zeros; the zero polynomial has degree 0.
  int degree() const {
    std::size_t n = coeffs_.size();
    while (n > 1 && coeffs_[n - 1] == 0.0) --n;
    return n == 0 ? 0 : static_cast<int>(n) - 1;
  }

  // Horner
  double operator()(double xi) const {
    double value = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * xi + *it;
    return value;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
  }
  Polynomial& operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

 private:
  std::vector<double> coeffs_;
};

/// Formal derivative d/dxi. Divide by dx for d/dx.
inline Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Polynomial{0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  return Polynomial(std::move(d));
}

/// Exact value of the monomial integral over the reference cell,
/// int_{-1/2}^{1/2} xi^j dxi.
inline double monomial_cell_integral(int j) {
  if (j % 2 != 0) return 0.0;
  double half_pow = 1.0;
  for (int l = 0; l < j + 1; ++l) half_pow *= 0.5;
  return 2.0 * half_pow / static_cast<double>(j + 1);
}

/// int_{-1/2}^{1/2} p(xi) dxi, from the coefficients.
inline double cell_integral(const Polynomial& p) {
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) sum += p[j] * monomial_cell_integral(static_cast<int>(j));
  return sum;
}

}  // namespace aflux

#endif  // AFLUX_POLYNOMIAL_HPP_
