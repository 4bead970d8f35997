#ifndef AFLUX_LIMITER_HPP_
#define AFLUX_LIMITER_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "aflux/basis.hpp"
#include "aflux/state.hpp"

namespace aflux {

struct CellBounds {
  double lo;
  double hi;
};

/// Bounds from the cell average and the two point values.
inline CellBounds cell_bounds(std::span<const double> dofs) {
  const double a = dofs[moment_index(0)], l = dofs[kLeftPoint], r = dofs[kRightPoint];
  return {std::min({a, l, r}), std::max({a, l, r})};
}

/// Replaces the higher moments by those of the parabola through both point
/// values with the same average, so the reconstruction becomes that parabola.
inline void parabola_fallback(std::span<double> dofs, const BasisSet& basis) {
  if (basis.degree() <= 2) return;
  const double pr = dofs[kRightPoint], pl = dofs[kLeftPoint], avg = dofs[moment_index(0)];
  // p(xi) = avg + (pr - pl) xi + 3 (pr + pl - 2 avg) (xi^2 - 1/12)
  const double curv = 3.0 * (pr + pl - 2.0 * avg);
  const Polynomial parabola{avg - curv / 12.0, pr - pl, curv};
  for (int k = 1; k < basis.num_moments(); ++k) dofs[moment_index(k)] = basis.moment_functional(k, parabola);
}

using FallbackFn = std::function<void(std::span<double>, const BasisSet&)>;

/// True if the reconstruction leaves the cell bounds at one of the ten
/// equispaced interior test points xi = -1/2 + j/11.
inline bool exceeds_bounds(std::span<const double> dofs, const BasisSet& basis) {
  const CellBounds b = cell_bounds(dofs);
  const double eps = 1e-12 * std::max(1.0, std::abs(b.hi));
  const Polynomial p = basis.reconstruct(dofs);
  for (int j = 1; j <= 10; ++j) {
    const double v = p(-0.5 + j / 11.0);
    if (v < b.lo - eps || v > b.hi + eps) return true;
  }
  return false;
}

inline std::vector<double> limit_cell(std::span<const double> dofs, const BasisSet& basis,
                                      const FallbackFn& fallback = parabola_fallback) {
  std::vector<double> out(dofs.begin(), dofs.end());
  if (basis.degree() > 2 && exceeds_bounds(dofs, basis)) fallback(out, basis);
  return out;
}

/// Applies limit_cell to every cell. Only moments k >= 1 can change, so the
/// shared point values stay consistent.
inline int limit_state(State& state, const BasisSet& basis, const FallbackFn& fallback = parabola_fallback) {
  int limited = 0;
  std::vector<double> dofs(basis.num_dofs());
  for (int i = 0; i < state.cells; ++i) {
    state.cell_dofs(i, dofs);
    if (basis.degree() > 2 && exceeds_bounds(dofs, basis)) {
      fallback(dofs, basis);
      for (int k = 1; k < state.moments_per_cell(); ++k) state.moment(i, k) = dofs[moment_index(k)];
      ++limited;
    }
  }
  return limited;
}

}  // namespace aflux

#endif  // AFLUX_LIMITER_HPP_
