#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

#include "aflux/scheme_core.hpp"
#include "test_support.hpp"

namespace {

using aflux::Flux;
using aflux::Mesh;
using aflux::Scheme;
using aflux::State;

State random_state(int n, int m, std::mt19937& rng) {
  State s(n, m);
  s.pt = testing_support::random_vector(rng, s.pt.size());
  s.mom = testing_support::random_vector(rng, s.mom.size());
  return s;
}

TEST(MomentRhs, ConstantStateIsStationary) {
  const Mesh mesh(0.0, 1.0, 6);
  for (int n = 2; n <= 6; ++n)
    for (const Flux& f : {Flux::advection(1.3), Flux::advection(-0.7), Flux::burgers()}) {
      const Scheme scheme(mesh, n, f);
      const State s = aflux::project_initial([](double) { return 0.6; }, mesh, scheme.basis());
      for (int i = 0; i < mesh.cells; ++i)
        for (int k = 0; k < n - 1; ++k) EXPECT_NEAR(aflux::moment_rhs(s, scheme, i, k), 0.0, 1e-13);
    }
}

TEST(MomentRhs, LinearVolumeTermClosedForm) {
  // k = 1, advection: quadrature volume term equals 4 c q^{(0)} / dx
  const Mesh mesh(0.0, 1.0, 5);
  std::mt19937 rng(1);
  const double c = 1.7;
  for (int n = 3; n <= 6; ++n) {
    const Scheme scheme(mesh, n, Flux::advection(c));
    const State s = random_state(n, mesh.cells, rng);
    for (int i = 0; i < mesh.cells; ++i) {
      const double boundary = -2.0 * c * (s.point(i) + s.point(i - 1)) / mesh.dx();
      EXPECT_NEAR(aflux::moment_rhs(s, scheme, i, 1) - boundary, 4.0 * c * s.moment(i, 0) / mesh.dx(), 1e-11);
    }
  }
}

TEST(MomentRhs, FastPathMatchesQuadrature) {
  const Mesh mesh(0.0, 1.0, 9);
  std::mt19937 rng(2);
  for (int n = 2; n <= 6; ++n) {
    const Scheme scheme(mesh, n, Flux::advection(-0.9));
    for (int trial = 0; trial < 10; ++trial) {
      const State s = random_state(n, mesh.cells, rng);
      for (int i = 0; i < mesh.cells; ++i)
        for (int k = 0; k < n - 1; ++k)
          EXPECT_NEAR(aflux::moment_rhs(s, scheme, i, k), aflux::moment_rhs_linear_fast(s, scheme, i, k),
                      1e-12 / mesh.dx());
    }
  }
}

TEST(MomentRhs, FastPathRejectsNonlinearFlux) {
  const Mesh mesh(0.0, 1.0, 4);
  const Scheme scheme(mesh, 3, Flux::burgers());
  const State s(3, 4);
  EXPECT_THROW(aflux::moment_rhs_linear_fast(s, scheme, 0, 0), std::logic_error);
  EXPECT_THROW(aflux::moment_rhs(s, scheme, 0, 2), std::out_of_range);
}

TEST(MomentRhs, ZerothMomentTelescopes) {
  const Mesh mesh(0.0, 1.0, 11);
  std::mt19937 rng(4);
  for (int n = 2; n <= 6; ++n)
    for (const Flux& f : {Flux::advection(1.0), Flux::burgers()}) {
      const Scheme scheme(mesh, n, f);
      const State s = random_state(n, mesh.cells, rng);
      double sum = 0.0;
      for (int i = 0; i < mesh.cells; ++i) sum += aflux::moment_rhs(s, scheme, i, 0);
      EXPECT_NEAR(sum, 0.0, 1e-12 / mesh.dx());
    }
}

TEST(MomentRhs, BurgersMatchesReferenceIntegral) {
  using boost::math::quadrature::gauss;
  const Mesh mesh(0.0, 1.0, 5);
  std::mt19937 rng(8);
  const int n = 3;
  const Scheme scheme(mesh, n, Flux::burgers());
  const auto& basis = scheme.basis();
  for (int trial = 0; trial < 20; ++trial) {
    const State s = random_state(n, mesh.cells, rng);
    for (int i = 0; i < mesh.cells; ++i) {
      const auto dofs = s.cell_dofs(i);
      const aflux::Polynomial p = basis.reconstruct(dofs);
      for (int k = 0; k < n - 1; ++k) {
        const aflux::Polynomial& dw = basis.weight_derivative(k);
        const double volume =
            gauss<double, 50>::integrate([&](double xi) { return 0.5 * p(xi) * p(xi) * dw(xi); }, -0.5, 0.5);
        const double surface = basis.weight(k)(0.5) * 0.5 * s.point(i) * s.point(i) -
                               basis.weight(k)(-0.5) * 0.5 * s.point(i - 1) * s.point(i - 1);
        const double reference = (volume - surface) / mesh.dx();
        EXPECT_NEAR(aflux::moment_rhs(s, scheme, i, k), reference, 1e-10);
      }
    }
  }
}

TEST(MomentRhs, ExactForAdvectedPolynomial) {
  // q(x, t) = P(x - c t); d/dt sigma_k = sigma_k(-c P') on the cell
  const Mesh mesh(0.0, 1.0, 8);
  const double c = 0.75;
  for (int n = 2; n <= 6; ++n) {
    const Scheme scheme(mesh, n, Flux::advection(c));
    const auto poly = [n](double x) {
      double v = 0.0;
      for (int j = 0; j <= n; ++j) v += std::cos(1.0 + j) * std::pow(x, j);
      return v;
    };
    const auto dpoly = [n](double x) {
      double v = 0.0;
      for (int j = 1; j <= n; ++j) v += j * std::cos(1.0 + j) * std::pow(x, j - 1);
      return v;
    };
    const State s = aflux::project_initial(poly, mesh, scheme.basis());
    const State ds = aflux::project_initial([&](double x) { return -c * dpoly(x); }, mesh, scheme.basis());
    for (int i = 1; i < mesh.cells; ++i)  // cell 0 would see the periodic seam
      for (int k = 0; k < n - 1; ++k) EXPECT_NEAR(aflux::moment_rhs(s, scheme, i, k), ds.moment(i, k), 1e-10);
  }
}

}  // namespace
