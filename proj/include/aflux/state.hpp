#ifndef AFLUX_STATE_HPP_
#define AFLUX_STATE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aflux/basis.hpp"
#include "aflux/polynomial.hpp"
#include "aflux/quadrature.hpp"

namespace aflux {

/// Uniform periodic mesh of `cells` cells on [x_left, x_right].
/// Cell i spans [x_left + i dx, x_left + (i+1) dx]; interface i is its right end.
struct Mesh {
  double x_left = 0.0;
  double x_right = 1.0;
  int cells = 3;

  Mesh() = default;
  Mesh(double left, double right, int m) : x_left(left), x_right(right), cells(m) {
    if (m < 3) throw std::invalid_argument("mesh needs at least 3 cells, got " + std::to_string(m));
    if (!(right > left)) throw std::invalid_argument("mesh needs x_right > x_left");
  }

  double length() const { return x_right - x_left; }
  double dx() const { return length() / cells; }
  double center(int i) const { return x_left + (i + 0.5) * dx(); }
  double interface(int i) const { return x_left + (i + 1) * dx(); }
  int wrap(int i) const { return ((i % cells) + cells) % cells; }

  /// Cell containing x (periodically wrapped) and the local coordinate xi.
  std::pair<int, double> locate(double x) const {
    double w = std::fmod(x - x_left, length());
    if (w < 0.0) w += length();
    int i = static_cast<int>(std::floor(w / dx()));
    if (i >= cells) i = cells - 1;
    if (i < 0) i = 0;
    return {i, (w - (i + 0.5) * dx()) / dx()};
  }
};

/// Degrees of freedom on a periodic mesh: one point value per interface
/// (shared by both neighbours) and N-1 moments per cell.
struct State {
  int degree = 2;
  int cells = 0;
  std::vector<double> pt;   // pt[i] ~ q(x_{i+1/2})
  std::vector<double> mom;  // mom[i * (N-1) + k] = q_i^{(k)}
  double t = 0.0;

  State() = default;
  State(int n, int m) : degree(n), cells(m), pt(static_cast<std::size_t>(m), 0.0),
                        mom(static_cast<std::size_t>(m) * static_cast<std::size_t>(n - 1), 0.0) {}

  int moments_per_cell() const { return degree - 1; }
  int wrap(int i) const { return ((i % cells) + cells) % cells; }

  double& point(int i) { return pt[static_cast<std::size_t>(wrap(i))]; }
  double point(int i) const { return pt[static_cast<std::size_t>(wrap(i))]; }
  double& moment(int i, int k) { return mom[static_cast<std::size_t>(wrap(i) * moments_per_cell() + k)]; }
  double moment(int i, int k) const { return mom[static_cast<std::size_t>(wrap(i) * moments_per_cell() + k)]; }

  /// Dofs of cell i in basis order (right point, left point, moments).
  std::vector<double> cell_dofs(int i) const {
    std::vector<double> d(static_cast<std::size_t>(degree) + 1);
    cell_dofs(i, d);
    return d;
  }
  void cell_dofs(int i, std::span<double> out) const {
    out[kRightPoint] = point(i);
    out[kLeftPoint] = point(i - 1);
    for (int k = 0; k < moments_per_cell(); ++k) out[moment_index(k)] = moment(i, k);
  }
  /// Writes cell i's dofs back. Point values are shared with the neighbours.
  void set_cell_dofs(int i, std::span<const double> d) {
    point(i) = d[kRightPoint];
    point(i - 1) = d[kLeftPoint];
    for (int k = 0; k < moments_per_cell(); ++k) moment(i, k) = d[moment_index(k)];
  }

  // Vector-space operations used by the Runge-Kutta stages. `t` is not touched.
  State& operator+=(const State& o) {
    for (std::size_t j = 0; j < pt.size(); ++j) pt[j] += o.pt[j];
    for (std::size_t j = 0; j < mom.size(); ++j) mom[j] += o.mom[j];
    return *this;
  }
  State& operator*=(double s) {
    for (double& v : pt) v *= s;
    for (double& v : mom) v *= s;
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator*(double s, State a) { return a *= s; }

  bool all_finite() const {
    for (double v : pt)
      if (!std::isfinite(v)) return false;
    for (double v : mom)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline bool all_finite(const State& s) { return s.all_finite(); }
inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

/// Piecewise-polynomial global reconstruction frozen at one time level.
/// Continuous across interfaces because the interface dofs are shared.
class Reconstruction {
 public:
  Reconstruction(const State& state, const Mesh& mesh, const BasisSet& basis)
      : mesh_(mesh), stride_(basis.num_dofs()), coeffs_(static_cast<std::size_t>(mesh.cells) * stride_) {
    if (state.cells != mesh.cells) throw std::invalid_argument("state and mesh cell counts differ");
    std::vector<double> dofs(stride_);
    for (int i = 0; i < mesh.cells; ++i) {
      state.cell_dofs(i, dofs);
      basis.legendre_coefficients(dofs, std::span<double>(coeffs_.data() + static_cast<std::size_t>(i) * stride_, stride_));
    }
  }

  const Mesh& mesh() const { return mesh_; }

  double cell_value(int i, double xi) const {
    const std::size_t c = static_cast<std::size_t>(mesh_.wrap(i));
    return BasisSet::legendre_series(std::span<const double>(coeffs_.data() + c * stride_, stride_), xi);
  }

  double operator()(double x) const {
    const auto [i, xi] = mesh_.locate(x);
    return cell_value(i, xi);
  }

 private:
  Mesh mesh_;
  std::size_t stride_;
  std::vector<double> coeffs_;  // Legendre coefficients per cell
};

/// Point values sampled at the interfaces, moments from a 12-node
/// Gauss-Legendre rule per cell.
inline State project_initial(const std::function<double(double)>& q0, const Mesh& mesh, const BasisSet& basis) {
  State s(basis.degree(), mesh.cells);
  const QuadratureRule gl = gauss_legendre(12);
  const double dx = mesh.dx();
  for (int i = 0; i < mesh.cells; ++i) {
    s.point(i) = q0(mesh.interface(i));
    const double xc = mesh.center(i);
    for (int k = 0; k < s.moments_per_cell(); ++k) {
      const Polynomial& w = basis.weight(k);
      s.moment(i, k) = gl.integrate([&](double xi) { return w(xi) * q0(xc + xi * dx); });
    }
  }
  return s;
}

inline double eval_global(const State& state, const Mesh& mesh, const BasisSet& basis, double x) {
  const auto [i, xi] = mesh.locate(x);
  return basis.evaluate(state.cell_dofs(i), xi);
}

/// dx * sum_i |pt[i] - exact(x_{i+1/2})|
inline double l1_error_points(const State& state, const Mesh& mesh, const std::function<double(double)>& exact) {
  double sum = 0.0;
  for (int i = 0; i < mesh.cells; ++i) sum += std::abs(state.point(i) - exact(mesh.interface(i)));
  return mesh.dx() * sum;
}

inline double total_mass(const State& state, const Mesh& mesh) {
  double sum = 0.0;
  for (int i = 0; i < state.cells; ++i) sum += state.moment(i, 0);
  return mesh.dx() * sum;
}

}  // namespace aflux

#endif  // AFLUX_STATE_HPP_
