#ifndef AFLUX_FLUX_HPP_
#define AFLUX_FLUX_HPP_

#include <string>

namespace aflux {

/// Scalar flux function f(q) with its derivative.
struct Flux {
  enum class Kind { kAdvection, kBurgers };

  Kind kind = Kind::kAdvection;
  double speed = 1.0;  // advection only

  static Flux advection(double c) { return {Kind::kAdvection, c}; }
  static Flux burgers() { return {Kind::kBurgers, 0.0}; }

  bool is_linear() const { return kind == Kind::kAdvection; }
  /// Polynomial degree of f in q.
  int polynomial_degree() const { return is_linear() ? 1 : 2; }

  double operator()(double q) const { return is_linear() ? speed * q : 0.5 * q * q; }
  double derivative(double q) const { return is_linear() ? speed : q; }

  std::string name() const { return is_linear() ? "advection" : "burgers"; }
};

}  // namespace aflux

#endif  // AFLUX_FLUX_HPP_
