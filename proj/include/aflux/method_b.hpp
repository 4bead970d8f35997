#ifndef AFLUX_METHOD_B_HPP_
#define AFLUX_METHOD_B_HPP_

// Fully discrete method: the moment equations are integrated over the time
// step with space-time Gauss-Lobatto quadrature, and all flux values come from
// tracing characteristics back into the reconstruction frozen at t^n.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "aflux/limiter.hpp"
#include "aflux/method_a.hpp"
#include "aflux/quadrature.hpp"
#include "aflux/scheme_core.hpp"
#include "aflux/state.hpp"

namespace aflux {

class CflViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_foot(double displacement, double dx) {
  if (std::abs(displacement) > dx * (1.0 + 1e-12))
    throw CflViolation("characteristic foot point leaves the neighbouring cell (|shift| = " +
                       std::to_string(std::abs(displacement) / dx) + " dx)");
}

}  // namespace detail

/// q(x, tau) = q_recon(x - c tau)
inline double trace_advection(const Reconstruction& recon, double x, double tau, double c) {
  const double shift = c * tau;
  detail::check_foot(shift, recon.mesh().dx());
  return recon(x - shift);
}

/// Sonic entropy fix (simplified): if the traced value and the local value
/// lie strictly on opposite sides of 0 and the data increase across the
/// characteristic reach around x, the stationary sonic state 0 is returned.
inline double sonic_fix(double candidate, const Reconstruction& recon, double x, double tau) {
  const double local = recon(x);
  const bool brackets = (local < 0.0 && candidate > 0.0) || (local > 0.0 && candidate < 0.0);
  if (!brackets) return candidate;
  const double reach = std::max(std::abs(local), std::abs(candidate)) * tau;
  if (recon(x + reach) > recon(x - reach)) return 0.0;
  return candidate;
}

/// Fixpoint iteration q^{(s)} = q_recon(x - q^{(s-1)} tau), s = 1 .. s_max,
/// started from q^{(0)} = q_recon(x). Each iteration gains one order in tau.
inline double trace_burgers(const Reconstruction& recon, double x, double tau, int s_max, bool entropy_fix = true) {
  if (tau < 0.0) throw std::invalid_argument("trace_burgers: tau must be non-negative");
  const double dx = recon.mesh().dx();
  double q = recon(x);
  if (tau == 0.0) return q;
  for (int s = 1; s <= s_max; ++s) {
    detail::check_foot(q * tau, dx);
    q = recon(x - q * tau);
  }
  return entropy_fix ? sonic_fix(q, recon, x, tau) : q;
}

/// Traced values per (cell, space node, time node). The interface nodes of
/// neighbouring cells hold the same value.
struct TraceTable {
  int cells = 0;
  std::size_t space_nodes = 0;
  std::size_t time_nodes = 0;
  std::vector<double> values;

  double& at(int i, std::size_t m, std::size_t l) {
    return values[(static_cast<std::size_t>(i) * space_nodes + m) * time_nodes + l];
  }
  double at(int i, std::size_t m, std::size_t l) const {
    return values[(static_cast<std::size_t>(i) * space_nodes + m) * time_nodes + l];
  }
};

struct MethodBOptions {
  bool limiter = false;
  bool entropy_fix = true;
  int s_max = 0;  // 0 selects N
};

/// Evaluates the evolution operator appropriate for the scheme's flux.
class Tracer {
 public:
  Tracer(const Reconstruction& recon, const Flux& flux, int s_max, bool entropy_fix)
      : recon_(&recon), flux_(flux), s_max_(s_max), entropy_fix_(entropy_fix) {}

  double operator()(double x, double tau) const {
    if (flux_.is_linear()) return trace_advection(*recon_, x, tau, flux_.speed);
    return trace_burgers(*recon_, x, tau, s_max_, entropy_fix_);
  }

 private:
  const Reconstruction* recon_;
  Flux flux_;
  int s_max_;
  bool entropy_fix_;
};

inline TraceTable fill_trace_table(const Scheme& scheme, const Tracer& trace, const QuadratureRule& time_rule, double dt) {
  const Mesh& mesh = scheme.mesh();
  const QuadratureRule& space = scheme.space_rule();
  TraceTable table{mesh.cells, space.size(), time_rule.size(), {}};
  table.values.resize(static_cast<std::size_t>(mesh.cells) * space.size() * time_rule.size());

  // Interfaces are traced once and shared by both adjacent cells.
  std::vector<double> iface(static_cast<std::size_t>(mesh.cells) * time_rule.size());
  for (int i = 0; i < mesh.cells; ++i)
    for (std::size_t l = 0; l < time_rule.size(); ++l)
      iface[static_cast<std::size_t>(i) * time_rule.size() + l] = trace(mesh.interface(i), time_rule.nodes[l] * dt);

  const std::size_t last = space.size() - 1;
  for (int i = 0; i < mesh.cells; ++i) {
    const double xc = mesh.center(i);
    for (std::size_t l = 0; l < time_rule.size(); ++l) {
      table.at(i, 0, l) = iface[static_cast<std::size_t>(mesh.wrap(i - 1)) * time_rule.size() + l];
      table.at(i, last, l) = iface[static_cast<std::size_t>(i) * time_rule.size() + l];
      for (std::size_t m = 1; m < last; ++m) table.at(i, m, l) = trace(xc + space.nodes[m] * mesh.dx(), time_rule.nodes[l] * dt);
    }
  }
  return table;
}

inline State method_b_step(const State& state_in, const Scheme& scheme, const QuadratureRule& time_rule, double dt,
                           const MethodBOptions& opts = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("method_b_step: dt must be positive");
  State state = state_in;
  if (opts.limiter) limit_state(state, scheme.basis());

  const Reconstruction recon(state, scheme.mesh(), scheme.basis());
  const Tracer tracer(recon, scheme.flux(), opts.s_max > 0 ? opts.s_max : scheme.degree(), opts.entropy_fix);
  const TraceTable table = fill_trace_table(scheme, tracer, time_rule, dt);

  const Flux& f = scheme.flux();
  const std::size_t ns = table.space_nodes, nt = table.time_nodes, last = ns - 1;
  const double inv_dx = 1.0 / scheme.mesh().dx();
  State next = state;
  std::vector<double> fvals(ns * nt);
  for (int i = 0; i < state.cells; ++i) {
    for (std::size_t m = 0; m < ns; ++m)
      for (std::size_t l = 0; l < nt; ++l) fvals[m * nt + l] = f(table.at(i, m, l));
    for (int k = 0; k < state.moments_per_cell(); ++k) {
      double integral = 0.0;
      for (std::size_t l = 0; l < nt; ++l) {
        double volume = 0.0;
        for (std::size_t m = 0; m < ns; ++m) volume += scheme.weighted_weight_derivative(m, k) * fvals[m * nt + l];
        const double surface = scheme.weight_right(k) * fvals[last * nt + l] - scheme.weight_left(k) * fvals[l];
        integral += time_rule.weights[l] * (surface - volume);
      }
      next.moment(i, k) = state.moment(i, k) - dt * inv_dx * integral;
    }
    next.point(i) = table.at(i, last, nt - 1);
  }
  next.t = state.t + dt;
  if (!next.all_finite()) throw StepFailure("non-finite value after method B step", 0);
  return next;
}

inline State method_b_run(State state, const Scheme& scheme, double cfl, double t_end, const MethodBOptions& opts = {},
                          int* steps_taken = nullptr) {
  if (!(cfl > 0.0)) throw std::invalid_argument("method_b_run: CFL number must be positive");
  const QuadratureRule time_rule = gauss_lobatto(time_rule_size(scheme.degree()), Interval::kUnitTime);
  int steps = 0;
  if (steps_taken) *steps_taken = 0;
  while (state.t < t_end) {
    double dt = stable_dt(state, scheme, cfl);
    bool last = false;
    if (state.t + dt >= t_end) {
      dt = t_end - state.t;
      last = true;
    }
    state = method_b_step(state, scheme, time_rule, dt, opts);
    if (last) state.t = t_end;
    ++steps;
    if (steps_taken) *steps_taken = steps;
  }
  return state;
}

}  // namespace aflux

#endif  // AFLUX_METHOD_B_HPP_
