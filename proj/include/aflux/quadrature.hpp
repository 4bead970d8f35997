#ifndef AFLUX_QUADRATURE_HPP_
#define AFLUX_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace aflux {

enum class Interval {
  kUnitCell,  // [-1/2, 1/2]
  kUnitTime,  // [0, 1]
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t m = 0; m < nodes.size(); ++m) sum += weights[m] * f(nodes[m]);
    return sum;
  }
};

namespace detail {

// Maps a rule on [-1, 1] to the requested unit interval and sorts it.
inline QuadratureRule map_reference_rule(std::vector<double> x, std::vector<double> w, Interval interval) {
  std::vector<std::size_t> order(x.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  const double shift = interval == Interval::kUnitCell ? 0.0 : 0.5;
  QuadratureRule rule;
  for (std::size_t j : order) {
    rule.nodes.push_back(0.5 * x[j] + shift);
    rule.weights.push_back(0.5 * w[j]);
  }
  return rule;
}

}  // namespace detail

/// n-point Gauss-Lobatto rule (endpoints included), exact to degree 2n-3.
/// Inner nodes are the roots of P'_{n-1}, found by Newton iteration started
/// from the Chebyshev-Gauss-Lobatto points.
inline QuadratureRule gauss_lobatto(int n, Interval interval = Interval::kUnitCell) {
  if (n < 2) throw std::invalid_argument("Gauss-Lobatto rule needs at least 2 nodes, got " + std::to_string(n));
  const int order = n - 1;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = std::cos(std::numbers::pi * j / order);

  std::vector<double> p_last(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < x.size(); ++j) {
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence up to P_order
      double p_prev = 1.0, p = x[j];
      for (int k = 2; k <= order; ++k) {
        const double p_next = ((2.0 * k - 1.0) * x[j] * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = p_next;
      }
      if (order == 1) p_prev = 1.0;
      const double step = (x[j] * p - p_prev) / ((order + 1) * p);
      x[j] -= step;
      p_last[j] = p;
      if (std::abs(step) <= 1e-14) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("Gauss-Lobatto Newton iteration did not converge");
  }
  // Recompute P_order at the converged nodes for the weights.
  std::vector<double> w(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < x.size(); ++j) {
    double p_prev = 1.0, p = x[j];
    for (int k = 2; k <= order; ++k) {
      const double p_next = ((2.0 * k - 1.0) * x[j] * p - (k - 1.0) * p_prev) / k;
      p_prev = p;
      p = p_next;
    }
    w[j] = 2.0 / (order * (order + 1.0) * p * p);
  }
  return detail::map_reference_rule(std::move(x), std::move(w), interval);
}

/// n-point Gauss-Legendre rule, exact to degree 2n-1. Used for projecting
/// initial data, not by the scheme itself.
inline QuadratureRule gauss_legendre(int n, Interval interval = Interval::kUnitCell) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least 1 node");
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double z = std::cos(std::numbers::pi * (j + 0.75) / (n + 0.5));
    double dp = 1.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double p_prev = 1.0, p = z;
      for (int k = 2; k <= n; ++k) {
        const double p_next = ((2.0 * k - 1.0) * z * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = p_next;
      }
      if (n == 1) p_prev = 1.0;
      dp = n * (z * p - p_prev) / (z * z - 1.0);
      const double step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("Gauss-Legendre Newton iteration did not converge");
    double p_prev = 1.0, p = z;
    for (int k = 2; k <= n; ++k) {
      const double p_next = ((2.0 * k - 1.0) * z * p - (k - 1.0) * p_prev) / k;
      p_prev = p;
      p = p_next;
    }
    if (n == 1) p_prev = 1.0;
    dp = n * (z * p - p_prev) / (z * z - 1.0);
    x[static_cast<std::size_t>(j)] = z;
    w[static_cast<std::size_t>(j)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return detail::map_reference_rule(std::move(x), std::move(w), interval);
}

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  return rule.integrate(std::forward<F>(f));
}

/// Lobatto node count for the in-cell volume integral so that f(recon) * W_k'
/// is integrated exactly when f is a polynomial of degree `flux_degree`.
/// Linear flux gives N+1 nodes (exact to degree 2N-1).
inline int space_rule_size(int degree, int flux_degree) {
  const int needed = ((flux_degree + 1) * degree + 1) / 2;
  return std::max(degree + 1, needed);
}

/// Lobatto node count in time for the fully discrete update (exact to degree >= N).
inline int time_rule_size(int degree) { return std::max(3, (degree + 4) / 2); }

}  // namespace aflux

#endif  // AFLUX_QUADRATURE_HPP_
