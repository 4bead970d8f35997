#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "aflux/stability.hpp"
#include "fourier_check.hpp"

namespace {

using aflux::ComplexMatrix;
using aflux::Method;

Eigen::VectorXcd constant_vector(int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(0) = 1.0;
  for (int k = 0; k < n - 1; k += 2) v(1 + k) = 1.0;
  return v;
}

TEST(Amplification, ConstantsAreEigenvectorsAtThetaZero) {
  for (int n = 2; n <= 6; ++n)
    for (Method m : {Method::kA, Method::kB}) {
      const ComplexMatrix g = aflux::assemble(m, 0.0, 0.3, n);
      const Eigen::VectorXcd v = constant_vector(n);
      EXPECT_LT((g * v - v).norm(), 1e-11) << "N=" << n << " " << aflux::method_name(m);
    }
}

TEST(Amplification, ZeroCflIsIdentity) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_LT((aflux::assemble_a(1.1, 0.0, n) - ComplexMatrix::Identity(n, n)).norm(), 1e-15);
    EXPECT_LT((aflux::assemble_b(1.1, 1e-12, n) - ComplexMatrix::Identity(n, n)).norm(), 1e-9);  // O(nu)
  }
  EXPECT_THROW(aflux::assemble_b(0.5, 1.2, 3), std::invalid_argument);
  EXPECT_THROW(aflux::assemble_b(0.5, 0.0, 3), std::invalid_argument);
}

TEST(Amplification, ConjugateSymmetry) {
  for (int n = 2; n <= 5; ++n)
    for (Method m : {Method::kA, Method::kB}) {
      const double theta = 0.9;
      const ComplexMatrix g1 = aflux::assemble(m, theta, 0.2, n);
      const ComplexMatrix g2 = aflux::assemble(m, 2.0 * std::numbers::pi - theta, 0.2, n);
      EXPECT_LT((g1.conjugate() - g2).norm(), 1e-12);
    }
}

TEST(Stability, SecondDegreeMethodA) {
  EXPECT_TRUE(aflux::is_stable(Method::kA, 2, 0.40));
  EXPECT_FALSE(aflux::is_stable(Method::kA, 2, 0.42));
}

TEST(Stability, ThirdDegreeMethodB) {
  EXPECT_TRUE(aflux::is_stable(Method::kB, 3, 0.87));
  EXPECT_FALSE(aflux::is_stable(Method::kB, 3, 0.90));
}

TEST(Stability, SecondDegreeMethodBAtUnitCfl) {
  EXPECT_LE(aflux::max_amplification(Method::kB, 2, 1.0), 1.0 + 1e-9);
  EXPECT_TRUE(std::isinf(aflux::max_amplification(Method::kB, 2, 1.01)));
}

TEST(CflMax, TableEntries) {
  EXPECT_NEAR(aflux::cfl_max(2, Method::kA), 0.41, 0.01);
  EXPECT_NEAR(aflux::cfl_max(6, Method::kA), 0.06, 0.01);
  EXPECT_NEAR(aflux::cfl_max(2, Method::kB), 1.00, 0.02);
}

TEST(CflMax, LargestStableValueIsStable) {
  aflux::StabilityCriterion crit;
  for (int n : {2, 3}) {
    const double nu = aflux::cfl_max(n, Method::kA, crit);
    EXPECT_TRUE(aflux::is_stable(Method::kA, n, nu, crit));
    EXPECT_FALSE(aflux::is_stable(Method::kA, n, nu + 2.0 * crit.resolution, crit));
  }
}

TEST(CrossValidation, SolverMatchesAmplificationMatrix) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  struct Case {
    Method m;
    int n;
    double nu;
    int j;
  };
  for (const Case& c : {Case{Method::kA, 2, 0.3, 1}, Case{Method::kA, 5, 0.05, 3}, Case{Method::kB, 3, 0.7, 2},
                        Case{Method::kB, 6, 0.45, 5}}) {
    std::vector<std::complex<double>> hat(static_cast<std::size_t>(c.n));
    for (auto& h : hat) h = {u(rng), u(rng)};
    EXPECT_LT(fourier_check::mismatch(c.m, c.n, c.nu, c.j, 12, hat), 1e-8);
  }
}

}  // namespace
