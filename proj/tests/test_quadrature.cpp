#include <cmath>

#include <gtest/gtest.h>

#include "aflux/quadrature.hpp"

namespace {

using aflux::gauss_lobatto;
using aflux::Interval;

double exact_monomial(int d, Interval interval) {
  if (interval == Interval::kUnitTime) return 1.0 / (d + 1);
  return d % 2 == 0 ? std::pow(0.5, d) / (d + 1) : 0.0;
}

TEST(GaussLobatto, Trapezoid) {
  const auto r = gauss_lobatto(2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r.nodes[0], -0.5);
  EXPECT_DOUBLE_EQ(r.nodes[1], 0.5);
  EXPECT_DOUBLE_EQ(r.weights[0], 0.5);
  EXPECT_DOUBLE_EQ(r.weights[1], 0.5);
}

TEST(GaussLobatto, Simpson) {
  const auto r = gauss_lobatto(3);
  EXPECT_NEAR(r.nodes[1], 0.0, 1e-16);
  EXPECT_NEAR(r.weights[0], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(r.weights[1], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.weights[2], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(r.integrate([](double x) { return x * x; }), 1.0 / 12.0, 1e-16);
}

TEST(GaussLobatto, FourNodeInteriorPoints) {
  const auto r = gauss_lobatto(4);
  EXPECT_NEAR(r.nodes[1], -0.5 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(r.nodes[2], 0.5 / std::sqrt(5.0), 1e-15);
}

TEST(GaussLobatto, ExactnessSweep) {
  for (Interval iv : {Interval::kUnitCell, Interval::kUnitTime})
    for (int n = 2; n <= 8; ++n) {
      const auto r = gauss_lobatto(n, iv);
      for (int d = 0; d <= 2 * n - 3; ++d)
        EXPECT_NEAR(aflux::integrate(r, [d](double x) { return std::pow(x, d); }), exact_monomial(d, iv), 1e-12)
            << "n=" << n << " d=" << d;
    }
}

TEST(GaussLobatto, StructuralProperties) {
  for (Interval iv : {Interval::kUnitCell, Interval::kUnitTime})
    for (int n = 2; n <= 12; ++n) {
      const auto r = gauss_lobatto(n, iv);
      const double a = iv == Interval::kUnitCell ? -0.5 : 0.0;
      const double b = a + 1.0;
      double sum = 0.0;
      for (double w : r.weights) {
        EXPECT_GT(w, 0.0);
        sum += w;
      }
      EXPECT_NEAR(sum, 1.0, 1e-14);
      EXPECT_DOUBLE_EQ(r.nodes.front(), a);
      EXPECT_DOUBLE_EQ(r.nodes.back(), b);
      for (std::size_t m = 0; m < r.size(); ++m) {
        if (m > 0) EXPECT_LT(r.nodes[m - 1], r.nodes[m]);
        const std::size_t mirror = r.size() - 1 - m;
        EXPECT_NEAR(r.nodes[m] - a, b - r.nodes[mirror], 1e-15);
        EXPECT_NEAR(r.weights[m], r.weights[mirror], 1e-15);
      }
    }
}

TEST(GaussLobatto, OddMonomialVanishes) {
  for (int n = 2; n <= 7; ++n) {
    const int big_n = n - 1;
    const auto r = gauss_lobatto(big_n + 1);
    EXPECT_NEAR(r.integrate([&](double x) { return std::pow(x, 2 * big_n - 1); }), 0.0, 1e-16);
  }
}

TEST(GaussLobatto, RejectsTooFewNodes) { EXPECT_THROW(gauss_lobatto(1), std::invalid_argument); }

TEST(GaussLegendre, Exactness) {
  for (int n = 1; n <= 12; ++n) {
    const auto r = aflux::gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d)
      EXPECT_NEAR(r.integrate([d](double x) { return std::pow(x, d); }), exact_monomial(d, Interval::kUnitCell), 1e-14);
  }
}

TEST(RuleSizes, SpaceAndTime) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(aflux::space_rule_size(n, 1), n + 1);
  // Burgers: the degree 3N-3 integrand needs ceil(3N/2) nodes
  EXPECT_EQ(aflux::space_rule_size(2, 2), 3);
  EXPECT_EQ(aflux::space_rule_size(3, 2), 5);
  EXPECT_EQ(aflux::space_rule_size(6, 2), 9);
  const int expected_t[] = {3, 3, 4, 4, 5};
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(aflux::time_rule_size(n), expected_t[n - 2]);
}

}  // namespace
