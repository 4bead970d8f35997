#ifndef AFLUX_SCHEME_CORE_HPP_
#define AFLUX_SCHEME_CORE_HPP_

// Semi-discrete evolution of the moments. Integrating the conservation law
// against W_k over a cell and by parts gives, in xi-coordinates,
//
//   d/dt q_i^{(k)} = -[W_k(1/2) f(q_{i+1/2}) - W_k(-1/2) f(q_{i-1/2})] / dx
//                    + (1/dx) int f(q_recon(xi)) W_k'(xi) dxi
//
// which is exact given the interface values. The volume integral is evaluated
// with a Gauss-Lobatto rule on the cell reconstruction.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "aflux/basis.hpp"
#include "aflux/flux.hpp"
#include "aflux/quadrature.hpp"
#include "aflux/state.hpp"

namespace aflux {

/// Spatial discretization: mesh, basis, flux and the in-cell volume rule,
/// with the basis tabulated at the rule's nodes.
class Scheme {
 public:
  Scheme(const Mesh& mesh, int degree, const Flux& flux)
      : Scheme(mesh, build_basis(degree), flux, gauss_lobatto(space_rule_size(degree, flux.polynomial_degree()))) {}

  Scheme(const Mesh& mesh, BasisSet basis, const Flux& flux, QuadratureRule space_rule)
      : mesh_(mesh), basis_(std::move(basis)), flux_(flux), rule_(std::move(space_rule)) {
    if (basis_.num_dofs() > 16 || rule_.size() > 32) throw std::invalid_argument("scheme: degree or rule size too large");
    const std::size_t nd = basis_.num_dofs();
    const std::size_t nm = static_cast<std::size_t>(basis_.num_moments());
    shape_at_nodes_.resize(rule_.size() * nd);
    weighted_dw_.resize(rule_.size() * nm);
    for (std::size_t m = 0; m < rule_.size(); ++m) {
      const double xi = rule_.nodes[m];
      for (std::size_t r = 0; r < nd; ++r) shape_at_nodes_[m * nd + r] = basis_.shape_value(r, xi);
      for (std::size_t k = 0; k < nm; ++k)
        weighted_dw_[m * nm + k] = rule_.weights[m] * basis_.weight_derivative(static_cast<int>(k))(xi);
    }
    for (int k = 0; k < basis_.num_moments(); ++k) {
      w_right_.push_back(basis_.weight(k)(0.5));
      w_left_.push_back(basis_.weight(k)(-0.5));
    }
  }

  const Mesh& mesh() const { return mesh_; }
  const BasisSet& basis() const { return basis_; }
  const Flux& flux() const { return flux_; }
  const QuadratureRule& space_rule() const { return rule_; }
  int degree() const { return basis_.degree(); }

  /// B_r(X_m)
  double shape_at_node(std::size_t m, std::size_t r) const { return shape_at_nodes_[m * basis_.num_dofs() + r]; }
  /// omega_m W_k'(X_m)
  double weighted_weight_derivative(std::size_t m, int k) const {
    return weighted_dw_[m * static_cast<std::size_t>(basis_.num_moments()) + static_cast<std::size_t>(k)];
  }
  double weight_right(int k) const { return w_right_[static_cast<std::size_t>(k)]; }
  double weight_left(int k) const { return w_left_[static_cast<std::size_t>(k)]; }

  /// Reconstruction of the given cell dofs at each space node.
  void recon_at_nodes(std::span<const double> dofs, std::span<double> out) const {
    const std::size_t nd = basis_.num_dofs();
    for (std::size_t m = 0; m < rule_.size(); ++m) {
      double v = 0.0;
      for (std::size_t r = 0; r < nd; ++r) v += shape_at_nodes_[m * nd + r] * dofs[r];
      out[m] = v;
    }
  }

 private:
  Mesh mesh_;
  BasisSet basis_;
  Flux flux_;
  QuadratureRule rule_;
  std::vector<double> shape_at_nodes_;
  std::vector<double> weighted_dw_;
  std::vector<double> w_right_, w_left_;
};

/// All moment time derivatives of cell i, written to out[0 .. N-2].
inline void cell_moment_rhs(const State& state, const Scheme& scheme, int i, std::span<double> out) {
  const int nm = scheme.degree() - 1;
  const Flux& f = scheme.flux();
  const double inv_dx = 1.0 / scheme.mesh().dx();
  const std::size_t ns = scheme.space_rule().size();

  double dofs[16];
  double recon[32];
  state.cell_dofs(i, std::span<double>(dofs, scheme.basis().num_dofs()));
  scheme.recon_at_nodes(std::span<const double>(dofs, scheme.basis().num_dofs()), std::span<double>(recon, ns));
  for (std::size_t m = 0; m < ns; ++m) recon[m] = f(recon[m]);

  const double f_right = f(state.point(i));
  const double f_left = f(state.point(i - 1));
  for (int k = 0; k < nm; ++k) {
    double volume = 0.0;
    for (std::size_t m = 0; m < ns; ++m) volume += scheme.weighted_weight_derivative(m, k) * recon[m];
    out[static_cast<std::size_t>(k)] =
        -(scheme.weight_right(k) * f_right - scheme.weight_left(k) * f_left) * inv_dx + volume * inv_dx;
  }
}

inline double moment_rhs(const State& state, const Scheme& scheme, int i, int k) {
  if (k < 0 || k > scheme.degree() - 2) throw std::out_of_range("moment index out of range");
  double out[16];
  cell_moment_rhs(state, scheme, i, std::span<double>(out, static_cast<std::size_t>(scheme.degree() - 1)));
  return out[k];
}

/// Closed form for linear flux and the monomial family: the volume term is
/// 2(k+1) c q_i^{(k-1)} / dx.
inline double moment_rhs_linear_fast(const State& state, const Scheme& scheme, int i, int k) {
  if (!scheme.flux().is_linear()) throw std::logic_error("moment_rhs_linear_fast requires a linear flux");
  if (!scheme.basis().is_monomial()) throw std::logic_error("moment_rhs_linear_fast requires the monomial family");
  if (k < 0 || k > scheme.degree() - 2) throw std::out_of_range("moment index out of range");
  const double c = scheme.flux().speed;
  const double dx = scheme.mesh().dx();
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  double rhs = -(k + 1) * c * (state.point(i) - sign * state.point(i - 1)) / dx;
  if (k >= 1) rhs += 2.0 * (k + 1) * c * state.moment(i, k - 1) / dx;
  return rhs;
}

}  // namespace aflux

#endif  // AFLUX_SCHEME_CORE_HPP_
