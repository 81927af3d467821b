#include <gtest/gtest.h>

#include <cmath>

#include "rvm/fields.hpp"
#include "rvm/kernels.hpp"
#include "rvm/oracle.hpp"

using namespace rvm;

namespace {

VorticityField wide_gaussian(double a, double w) {
  VorticityField f;
  f.name = "gaussian";
  f.support_radius = 12.0 * w;
  f.eval = [=](Vec2 z) { return a * std::exp(-norm2(z) / (2.0 * w * w)); };
  return f;
}

}  // namespace

TEST(GaussianSolution, InitialProfileAndSpreading) {
  const auto s = oracle::gaussian_solution(2.0, 0.5, 0.1);
  EXPECT_DOUBLE_EQ(s.omega_exact(0.0, 0.0), 2.0);
  EXPECT_NEAR(s.omega_exact(0.5, 0.0), 2.0 * std::exp(-0.5), 1e-15);
  // s^2 = 0.25 + 0.2 at t = 1.
  EXPECT_NEAR(s.omega_exact(0.0, 1.0), 2.0 * 0.25 / 0.45, 1e-15);
  const double gamma = kTwoPi * 2.0 * 0.25;
  EXPECT_NEAR(s.u_theta_exact(100.0, 1.0), gamma / (kTwoPi * 100.0), 1e-14);
  EXPECT_NEAR(s.u_theta_exact(1e-9, 0.0), 0.0, 1e-8);
}

TEST(RadialHeatEvolution, MatchesClosedForm) {
  const auto f = wide_gaussian(1.0, 0.3);
  const auto s = oracle::gaussian_solution(1.0, 0.3, 0.02);
  for (const double t : {0.05, 0.5, 3.0}) {
    for (const double r : {0.0, 0.1, 0.3, 0.7, 1.2}) {
      const double e = s.omega_exact(r, t);
      EXPECT_NEAR(oracle::radial_heat_evolution(f, 0.02, t, r), e, 1e-8 * std::max(e, 1e-3));
    }
  }
  EXPECT_DOUBLE_EQ(oracle::radial_heat_evolution(f, 0.02, 0.0, 0.3), f({0.3, 0.0}));
}

TEST(CirculationUTheta, MatchesClosedForm) {
  const double a = 1.5, w = 0.4;
  const auto s = oracle::gaussian_solution(a, w, 0.0);
  auto radial = [&](double r) { return a * std::exp(-r * r / (2 * w * w)); };
  for (const double r : {0.05, 0.4, 1.0, 2.5}) {
    EXPECT_NEAR(oracle::circulation_u_theta(radial, r), s.u_theta_exact(r, 0.0), 1e-10);
  }
}

TEST(DenseIntegral, Polynomials) {
  EXPECT_NEAR(oracle::dense_integral([](Vec2) { return 1.0; }, 2.0), 16.0, 1e-12);
  EXPECT_NEAR(oracle::dense_integral([](Vec2 z) { return z.x1 * z.x1 * z.x2 * z.x2; }, 1.0), 4.0 / 9.0,
              1e-13);
}

TEST(FiniteDifferences, RigidRotation) {
  auto u = [](Vec2 x) { return Vec2{-x.x2, x.x1}; };
  EXPECT_NEAR(oracle::fd_divergence(u, {0.3, -0.7}, 1e-3), 0.0, 1e-12);
  EXPECT_NEAR(oracle::fd_curl(u, {0.3, -0.7}, 1e-3), 2.0, 1e-10);
  auto v = [](Vec2 x) { return Vec2{x.x1 * x.x1, 0.0}; };
  EXPECT_NEAR(oracle::fd_divergence(v, {1.5, 0.0}, 1e-3), 3.0, 1e-9);
}

TEST(DenseBiotSavart, MatchesExactVelocity) {
  const double a = 1.0, w = 0.5;
  const auto g = fields::gaussian_vortex(a, w);
  const auto s = oracle::gaussian_solution(a, w, 0.0);
  for (const double r : {0.2, 0.5, 1.0, 2.0}) {
    const Vec2 x{r * std::cos(0.3), r * std::sin(0.3)};
    const Vec2 u = oracle::dense_biot_savart(g, x);
    EXPECT_NEAR(dot(u, perp(x) / r), s.u_theta_exact(r, 0.0), 1e-4 * s.u_theta_exact(r, 0.0));
    EXPECT_NEAR(dot(u, x / r), 0.0, 1e-6);
  }
}

TEST(DenseBiotSavart, FarFieldIsPointVortex) {
  const auto g = fields::gaussian_vortex(1.0, 0.2);
  const Vec2 x{6.0, -2.0};
  const double gamma = kTwoPi * 0.04;
  const Vec2 u = oracle::dense_biot_savart(g, x);
  const Vec2 ref = gamma * kernels::biot_savart_free(x);
  EXPECT_NEAR(u.x1, ref.x1, 1e-6 * norm(ref));
  EXPECT_NEAR(u.x2, ref.x2, 1e-6 * norm(ref));
}
