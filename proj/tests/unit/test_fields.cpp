#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rvm/fields.hpp"
#include "rvm/kernels.hpp"
#include "rvm/oracle.hpp"

using namespace rvm;

TEST(GaussianVortex, PeakAndTruncation) {
  const auto f = fields::gaussian_vortex(3.0, 0.2, {1.0, -0.5});
  EXPECT_EQ(f({1.0, -0.5}), 3.0);
  EXPECT_EQ(f(Vec2{1.0, -0.5} + Vec2{10 * 0.2, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(f.support_radius, 6 * 0.2);
  EXPECT_THROW(fields::gaussian_vortex(1.0, 0.0), std::invalid_argument);
}

TEST(GaussianVortex, CirculationMatchesClosedForm) {
  const double a = 2.0, w = 0.3;
  const auto f = fields::gaussian_vortex(a, w);
  const double total = oracle::dense_integral(f.eval, f.support_radius);
  EXPECT_NEAR(total, kTwoPi * a * w * w, 1e-6 * kTwoPi * a * w * w);
}

TEST(GaussianVortex, RadiallySymmetric) {
  const Vec2 c{0.3, 0.7};
  const auto f = fields::gaussian_vortex(1.5, 0.4, c);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-2.6, 2.6), angle(0.0, kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 z{u(gen), u(gen)};
    const double t = angle(gen);
    const Vec2 rz{std::cos(t) * z.x1 - std::sin(t) * z.x2, std::sin(t) * z.x1 + std::cos(t) * z.x2};
    EXPECT_NEAR(f(c + z), f(c + rz), 1e-14);
  }
}

TEST(Presets, CompactSupport) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), extra(1e-9, 50.0);
  const auto g = fields::gaussian_vortex(1.0, 0.25, {0.5, 0.5});
  const auto forcing = fields::constant_forcing(-0.2, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = angle(gen);
    const Vec2 dir{std::cos(t), std::sin(t)};
    EXPECT_EQ(g(g.center + (g.support_radius + extra(gen)) * dir), 0.0);
    EXPECT_EQ(forcing((forcing.support_radius + extra(gen)) * dir, 0.3), 0.0);
  }
}

TEST(ConstantForcing, Examples) {
  const auto g = fields::constant_forcing(-0.2, std::sqrt(2.0) * 40 * 0.15);
  EXPECT_EQ(g({0.0, 1.0}, 0.5), -0.2);
  EXPECT_EQ(g({2.0, 3.0}, 0.0), g({2.0, 3.0}, 7.5));
  EXPECT_EQ(g({100.0, 0.0}, 0.0), 0.0);
  EXPECT_FALSE(g.identically_zero);
  EXPECT_TRUE(fields::constant_forcing(0.0, 1.0).identically_zero);
}

TEST(ZeroPresets, AreZero) {
  EXPECT_TRUE(fields::zero_vorticity().identically_zero);
  EXPECT_EQ(fields::zero_vorticity()({1.0, 2.0}), 0.0);
  EXPECT_TRUE(fields::zero_forcing().identically_zero);
  EXPECT_EQ(fields::zero_forcing()({1.0, 2.0}, 1.0), 0.0);
}

TEST(UniformStream, Examples) {
  const auto s = fields::uniform_stream_initial(1.0, 0.00125);
  EXPECT_EQ(s.velocity({3.0, 2.0}), (Vec2{1.0, 0.0}));
  EXPECT_EQ(s.velocity({3.0, 0.0}), (Vec2{0.0, 0.0}));
  EXPECT_EQ(s.omega0({0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(s.theta0(0.7), 800.0);
}

TEST(WallExperimentSetup, GoldenReynolds) {
  EXPECT_DOUBLE_EQ(WallExperimentSetup{}.reynolds(), 600.0);
}
