#ifndef AFLUX_METHOD_A_HPP_
#define AFLUX_METHOD_A_HPP_

// Semi-discrete method: exact moment evolution plus an upwinded
// finite-difference update of the interface values, advanced with SSP-RK3.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "aflux/basis.hpp"
#include "aflux/limiter.hpp"
#include "aflux/scheme_core.hpp"
#include "aflux/state.hpp"

namespace aflux {

class StepFailure : public std::runtime_error {
 public:
  StepFailure(const std::string& what, int stage) : std::runtime_error(what), stage_(stage) {}
  int stage() const { return stage_; }

 private:
  int stage_;
};

/// dx * d/dx of the reconstruction at the right end of cell i (d) and at the
/// left end of cell i+1 (dstar), as weights over each cell's dofs in basis
/// order. For cell i+1 the left point dof is q_{i+1/2} and the right one q_{i+3/2}.
struct FdStencil {
  std::vector<double> d;
  std::vector<double> dstar;
  std::vector<Rational> d_exact;
  std::vector<Rational> dstar_exact;
};

inline FdStencil build_fd(const BasisSet& basis) {
  FdStencil s;
  const Rational half(1, 2);
  for (std::size_t r = 0; r < basis.num_dofs(); ++r) {
    const auto& c = basis.shape_exact(r);
    Rational right(0), left(0), pow(1);
    // B_r'(xi) = sum_j j c_j xi^{j-1}
    for (std::size_t j = 1; j < c.size(); ++j) {
      right += Rational(static_cast<long long>(j)) * c[j] * pow;
      left += Rational(static_cast<long long>(j)) * c[j] * pow * ((j - 1) % 2 == 0 ? 1 : -1);
      pow *= half;
    }
    s.d_exact.push_back(right);
    s.dstar_exact.push_back(left);
    s.d.push_back(right.convert_to<double>());
    s.dstar.push_back(left.convert_to<double>());
  }
  return s;
}

/// d/dt q_{i+1/2} = -( f'(q)^+ D + f'(q)^- D* ), with q = q_{i+1/2}.
inline double point_rhs(const State& state, const Scheme& scheme, const FdStencil& stencil, int i) {
  const double a = scheme.flux().derivative(state.point(i));
  const std::size_t nd = scheme.basis().num_dofs();
  double dofs[16];
  double rhs = 0.0;
  if (a > 0.0) {
    state.cell_dofs(i, std::span<double>(dofs, nd));
    double d = 0.0;
    for (std::size_t r = 0; r < nd; ++r) d += stencil.d[r] * dofs[r];
    rhs -= a * d;
  } else if (a < 0.0) {
    state.cell_dofs(i + 1, std::span<double>(dofs, nd));
    double d = 0.0;
    for (std::size_t r = 0; r < nd; ++r) d += stencil.dstar[r] * dofs[r];
    rhs -= a * d;
  }
  return rhs / scheme.mesh().dx();
}

/// Full-state time derivative of the semi-discrete method.
class MethodARhs {
 public:
  explicit MethodARhs(const Scheme& scheme) : scheme_(&scheme), stencil_(build_fd(scheme.basis())) {}

  const FdStencil& stencil() const { return stencil_; }

  State operator()(const State& u) const {
    State du(u.degree, u.cells);
    const std::size_t nm = static_cast<std::size_t>(u.moments_per_cell());
    for (int i = 0; i < u.cells; ++i) {
      cell_moment_rhs(u, *scheme_, i, std::span<double>(du.mom.data() + static_cast<std::size_t>(i) * nm, nm));
      du.pt[static_cast<std::size_t>(i)] = point_rhs(u, *scheme_, stencil_, i);
    }
    return du;
  }

 private:
  const Scheme* scheme_;
  FdStencil stencil_;
};

/// Shu-Osher SSP-RK3 step for any vector-space value U.
template <class U, class Rhs>
U ssp_rk3_step(const U& u, double dt, const Rhs& rhs) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssp_rk3_step: dt must be positive");
  U u1 = u + dt * rhs(u);
  if (!all_finite(u1)) throw StepFailure("non-finite value after RK stage 1", 1);
  U u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
  if (!all_finite(u2)) throw StepFailure("non-finite value after RK stage 2", 2);
  U out = (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
  if (!all_finite(out)) throw StepFailure("non-finite value after RK stage 3", 3);
  return out;
}

/// dt = cfl * dx / smax, or cfl * dx if all speeds vanish. smax is the largest
/// |f'| over the point values and, for nonlinear flux, also over the
/// reconstruction at the space nodes (a coarse cell can hide its peak).
inline double stable_dt(const State& state, const Scheme& scheme, double cfl) {
  double smax = 0.0;
  for (double q : state.pt) smax = std::max(smax, std::abs(scheme.flux().derivative(q)));
  if (!scheme.flux().is_linear()) {
    const std::size_t nd = scheme.basis().num_dofs(), ns = scheme.space_rule().size();
    double dofs[16], vals[32];
    for (int i = 0; i < state.cells; ++i) {
      state.cell_dofs(i, std::span<double>(dofs, nd));
      scheme.recon_at_nodes(std::span<const double>(dofs, nd), std::span<double>(vals, ns));
      for (std::size_t m = 0; m < ns; ++m) smax = std::max(smax, std::abs(scheme.flux().derivative(vals[m])));
    }
  }
  const double dx = scheme.mesh().dx();
  return smax > 0.0 ? cfl * dx / smax : cfl * dx;
}

struct RunOptions {
  bool limiter = false;
};

inline State method_a_run(State state, const Scheme& scheme, double cfl, double t_end, const RunOptions& opts = {},
                          int* steps_taken = nullptr) {
  if (!(cfl > 0.0)) throw std::invalid_argument("method_a_run: CFL number must be positive");
  const MethodARhs rhs(scheme);
  int steps = 0;
  if (steps_taken) *steps_taken = 0;
  while (state.t < t_end) {
    if (opts.limiter) limit_state(state, scheme.basis());
    double dt = stable_dt(state, scheme, cfl);
    bool last = false;
    if (state.t + dt >= t_end) {
      dt = t_end - state.t;
      last = true;
    }
    const double t = state.t;
    state = ssp_rk3_step(state, dt, rhs);
    state.t = last ? t_end : t + dt;
    ++steps;
    if (steps_taken) *steps_taken = steps;
  }
  return state;
}

}  // namespace aflux

#endif  // AFLUX_METHOD_A_HPP_
