#ifndef AFLUX_STABILITY_HPP_
#define AFLUX_STABILITY_HPP_

// Von Neumann analysis for linear advection with c > 0. A Fourier mode
// u_j = u_hat e^{i j theta} of the per-cell dof vector
// (q_{i+1/2}, q_i^{(0)}, ..., q_i^{(N-2)}) is multiplied by G(theta, nu) per step.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "aflux/basis.hpp"
#include "aflux/method_a.hpp"
#include "aflux/method_b.hpp"
#include "aflux/quadrature.hpp"
#include "aflux/scheme_core.hpp"

namespace aflux {

enum class Method { kA, kB };

inline std::string method_name(Method m) { return m == Method::kA ? "a" : "b"; }

using ComplexMatrix = Eigen::MatrixXcd;

/// Dimensionless semi-discrete operator (c = dx = 1) of the upwind method.
inline ComplexMatrix semi_discrete_symbol(double theta, const BasisSet& basis, const FdStencil& stencil) {
  const int n = basis.degree();
  const std::complex<double> shift = std::polar(1.0, -theta);  // left neighbour's point value
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  // Point value row: -D
  l(0, 0) = -(stencil.d[kRightPoint] + stencil.d[kLeftPoint] * shift);
  for (int k = 0; k < n - 1; ++k) l(0, 1 + k) = -stencil.d[moment_index(k)];
  // Moment rows, closed form for linear flux
  for (int k = 0; k < n - 1; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    l(1 + k, 0) = -(k + 1.0) * (1.0 - sign * shift);
    if (k >= 1) l(1 + k, k) += 2.0 * (k + 1.0);
  }
  return l;
}

/// RK3 amplification matrix of the semi-discrete method:
/// G = I + Z + Z^2/2 + Z^3/6, Z = nu * L(theta).
inline ComplexMatrix assemble_a(double theta, double nu, int degree) {
  const BasisSet basis = build_basis(degree);
  const FdStencil stencil = build_fd(basis);
  const ComplexMatrix z = nu * semi_discrete_symbol(theta, basis, stencil);
  const ComplexMatrix id = ComplexMatrix::Identity(degree, degree);
  return id + z * (id + z * (0.5 * id + z / 6.0));
}

/// Impulse responses of one fully discrete step. Entry (s, column d) holds the
/// dofs of cell s after a step applied to the unit dof d placed in cell 0.
struct ResponseKernel {
  std::vector<std::pair<int, Eigen::MatrixXd>> offsets;
  int degree = 0;

  ComplexMatrix symbol(double theta) const {
    ComplexMatrix g = ComplexMatrix::Zero(degree, degree);
    for (const auto& [s, r] : offsets) g += std::polar(1.0, -theta * s) * r.cast<std::complex<double>>();
    return g;
  }
};

/// Response kernel of the fully discrete method on a small periodic mesh,
/// exploiting linearity and translation invariance.
inline ResponseKernel method_b_kernel(double nu, int degree, int time_nodes = 0, int cells = 8) {
  const Mesh mesh(0.0, 1.0, cells);
  const Scheme scheme(mesh, degree, Flux::advection(1.0));
  const QuadratureRule time_rule =
      gauss_lobatto(time_nodes > 0 ? time_nodes : time_rule_size(degree), Interval::kUnitTime);
  const double dt = nu * mesh.dx();

  ResponseKernel kernel;
  kernel.degree = degree;
  for (int c = 0; c < cells; ++c) {
    const int s = c <= cells / 2 ? c : c - cells;
    kernel.offsets.emplace_back(s, Eigen::MatrixXd::Zero(degree, degree));
  }
  for (int d = 0; d < degree; ++d) {
    State impulse(degree, cells);
    if (d == 0) impulse.point(0) = 1.0;
    else impulse.moment(0, d - 1) = 1.0;
    const State out = method_b_step(impulse, scheme, time_rule, dt);
    for (int c = 0; c < cells; ++c) {
      auto& r = kernel.offsets[static_cast<std::size_t>(c)].second;
      r(0, d) = out.point(c);
      for (int k = 0; k < degree - 1; ++k) r(1 + k, d) = out.moment(c, k);
    }
  }
  return kernel;
}

inline ComplexMatrix assemble_b(double theta, double nu, int degree) {
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("assemble_b: CFL number must lie in (0, 1]");
  return method_b_kernel(nu, degree).symbol(theta);
}

inline ComplexMatrix assemble(Method method, double theta, double nu, int degree) {
  return method == Method::kA ? assemble_a(theta, nu, degree) : assemble_b(theta, nu, degree);
}

inline double spectral_radius(const ComplexMatrix& g) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(g, false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

struct StabilityCriterion {
  int theta_samples = 720;
  double tolerance = 1e-9;
  double resolution = 1e-3;
  double scan_step = 0.01;
  double nu_upper = 1.5;
};

/// Maximum spectral radius of G(theta, nu) over the sampled wavenumbers.
/// Method B beyond nu = 1 leaves the one-cell reach and counts as unstable.
inline double max_amplification(Method method, int degree, double nu, int theta_samples = 720, int time_nodes = 0) {
  std::vector<double> thetas(static_cast<std::size_t>(theta_samples));
  for (int j = 0; j < theta_samples; ++j) thetas[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / theta_samples;
  double rho = 0.0;
  if (method == Method::kA) {
    const BasisSet basis = build_basis(degree);
    const FdStencil stencil = build_fd(basis);
    const ComplexMatrix id = ComplexMatrix::Identity(degree, degree);
    for (double theta : thetas) {
      const ComplexMatrix z = nu * semi_discrete_symbol(theta, basis, stencil);
      rho = std::max(rho, spectral_radius(id + z * (id + z * (0.5 * id + z / 6.0))));
    }
  } else {
    if (nu > 1.0) return std::numeric_limits<double>::infinity();
    const ResponseKernel kernel = method_b_kernel(nu, degree, time_nodes);
    for (double theta : thetas) rho = std::max(rho, spectral_radius(kernel.symbol(theta)));
  }
  return rho;
}

inline bool is_stable(Method method, int degree, double nu, const StabilityCriterion& crit = {}) {
  return max_amplification(method, degree, nu, crit.theta_samples) <= 1.0 + crit.tolerance;
}

/// Largest stable CFL number in (0, nu_upper]: a scan in steps of `scan_step`
/// over the whole range finds the largest stable grid value, bisection then
/// narrows the transition above it. Isolated unstable pockets at smaller CFL
/// numbers do not cap the result.
inline double cfl_max(int degree, Method method, const StabilityCriterion& crit = {}) {
  const int scan_count = static_cast<int>(std::floor(crit.nu_upper / crit.scan_step + 1e-9));
  int best = 0;
  for (int j = scan_count; j >= 1; --j) {
    if (is_stable(method, degree, j * crit.scan_step, crit)) {
      best = j;
      break;
    }
  }
  double lo = best * crit.scan_step;
  double hi = (best + 1) * crit.scan_step;
  if (best == 0) {
    lo = 1e-4;
    if (!is_stable(method, degree, lo, crit))
      throw std::runtime_error("unstable at CFL 1e-4: amplification operator is inconsistent");
  }
  if (best == scan_count) return lo;
  while (hi - lo > crit.resolution) {
    const double mid = 0.5 * (lo + hi);
    (is_stable(method, degree, mid, crit) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace aflux

#endif  // AFLUX_STABILITY_HPP_
