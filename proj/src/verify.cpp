#include "rvm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

#include "rvm/kernels.hpp"
#include "rvm/oracle.hpp"

namespace rvm {
namespace {

double max_abs_diff(Vec2 a, Vec2 b) { return std::max(std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2)); }

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

// Plain Gaussian with a support wide enough that truncation is invisible.
VorticityField untapered_gaussian(double amplitude, double width) {
  VorticityField f;
  f.name = "gaussian";
  f.support_radius = 12.0 * width;
  f.eval = [=](Vec2 z) { return amplitude * std::exp(-norm2(z) / (2.0 * width * width)); };
  return f;
}

CheckResult check_lattice_count() {
  const auto n = lattice::build_wall_lattices(WallMeshParams{}).size();
  return {"golden wall lattice has 26042 nodes", n == 26042, "count " + std::to_string(n)};
}

CheckResult check_heat_oracles() {
  const double a = 1.0, w = 0.5, nu = 0.05;
  const auto field = untapered_gaussian(a, w);
  const auto exact = oracle::gaussian_solution(a, w, nu);
  double worst = 0.0;
  for (const double t : {0.0, 0.1, 1.0}) {
    for (int i = 0; i <= 50; ++i) {
      const double r = 5.0 * w * i / 50.0;
      const double e = exact.omega_exact(r, t);
      worst = std::max(worst, std::abs(oracle::radial_heat_evolution(field, nu, t, r) - e) / e);
    }
  }
  return {"heat evolution: closed form vs quadrature (1e-6 rel)", worst <= 1e-6,
          "max rel " + sci(worst)};
}

CheckResult check_dense_biot_savart() {
  const double a = 1.0, w = 0.5;
  const auto field = fields::gaussian_vortex(a, w);
  const auto exact = oracle::gaussian_solution(a, w, 0.0);
  double worst = 0.0;
  for (const double angle : {0.0, 0.7, 2.0, 4.1}) {
    const Vec2 x{2.0 * w * std::cos(angle), 2.0 * w * std::sin(angle)};
    const Vec2 u = oracle::dense_biot_savart(field, x);
    const double ut = dot(u, perp(x) / norm(x));
    const double e = exact.u_theta_exact(2.0 * w, 0.0);
    worst = std::max(worst, std::abs(ut - e) / e);
  }
  return {"dense Biot-Savart vs exact u_theta at r = 2w (1e-4 rel)", worst <= 1e-4,
          "max rel " + sci(worst)};
}

CheckResult check_divergence() {
  const auto field = fields::gaussian_vortex(1.0, 0.5);
  const oracle::DenseBiotSavart u(field, 0.5 / 20.0, 0.5);
  auto probe = [&](Vec2 x) { return u(x); };
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double angle = 0.6283 * i;
    const double r = 0.6 + 0.2 * i;
    worst = std::max(worst, std::abs(oracle::fd_divergence(probe, {r * std::cos(angle), r * std::sin(angle)}, 1e-3)));
  }
  return {"dense Biot-Savart divergence-free (1e-4)", worst <= 1e-4, "max |div| " + sci(worst)};
}

CheckResult check_circulation() {
  const double a = 2.0, w = 0.3;
  const auto field = fields::gaussian_vortex(a, w);
  const double total = oracle::dense_integral(field.eval, field.support_radius);
  const double expected = kTwoPi * a * w * w;
  const double rel = std::abs(total - expected) / expected;
  return {"Gaussian circulation 2 pi a w^2 (1e-6 rel)", rel <= 1e-6, "rel " + sci(rel)};
}

CheckResult check_stress_fd() {
  const double step = 1e-6;
  double worst = 0.0;
  const struct {
    Vec2 y;
    double x1, delta;
  } cases[] = {{{0.0, 1.0}, 0.0, 0.01}, {{0.01, 0.02}, 0.0, 0.01}, {{0.3, 0.1}, -0.05, 0.2},
               {{-0.02, 0.005}, 0.01, 0.01}};
  for (const auto& c : cases) {
    auto k1 = [&](double x2) {
      return kernels::halfplane_kernel_regularized({c.x1, x2}, c.y, c.delta).x1;
    };
    const double fd = -(k1(step) - k1(-step)) / (2.0 * step);
    const double an = kernels::boundary_stress_kernel(c.y, c.x1, c.delta);
    worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
  }
  return {"wall stress kernel vs finite difference (1e-4 rel)", worst <= 1e-4,
          "max rel " + sci(worst)};
}

CheckResult check_wall_cancellation() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Vec2 y{-1.0 + 0.1 * i, 0.05 + 0.07 * i};
    const Vec2 k = kernels::halfplane_kernel({0.3 - 0.05 * i, 0.0}, y);
    worst = std::max(worst, norm(k));
  }
  return {"half-plane kernel vanishes on the wall", worst <= 1e-15, "max |K| " + sci(worst)};
}

CheckResult check_quadrature_order() {
  const auto field = fields::gaussian_vortex(1.0, 0.5);
  const auto study = lattice::quadrature_error_order(field.eval, field.support_radius, 0.5);
  return {"grid-sum convergence order >= 1.9", study.order >= 1.9,
          "order " + sci(study.order)};
}

CheckResult check_wall_equivalence() {
  const auto tiny = tiny_wall_instance();
  auto params = tiny.params;
  params.backend = summation::Backend::serial;
  const auto eq = compare_wall_with_brute_force(tiny.mesh, tiny.init, params, 5, 7, tiny.probes);
  const double worst = std::max({eq.max_position_diff, eq.max_theta_diff, eq.max_velocity_diff});
  return {"wall accumulators vs stored-trajectory oracle (1e-12 abs)", worst <= 1e-12,
          "max abs " + sci(worst)};
}

}  // namespace

TinyWallInstance tiny_wall_instance() {
  TinyWallInstance t;
  t.mesh = WallMeshParams{0.15, 0.1, 0.01, 2, 2, 2};
  t.init.omega0 = fields::gaussian_vortex(5.0, 0.2, {0.0, 0.3});
  t.init.forcing = fields::constant_forcing(-0.2, 1.0);
  t.init.theta0 = [](double x1) { return 10.0 + 2.0 * x1; };
  t.params.delta = 0.05;
  t.params.eps = 0.05;
  t.params.nu = 0.01;
  t.params.dt = 0.01;
  t.params.n_steps = 5;
  t.params.n_copies = 1;
  t.probes = {{0.05, 0.02}, {-0.1, 0.2}, {0.2, -0.1}, {0.0, 0.01}, {0.13, 0.31}};
  return t;
}

WallEquivalence compare_wall_with_brute_force(const WallMeshParams& mesh,
                                              const WallInitialData& init,
                                              const WallRunParams& params, long n_steps,
                                              std::uint64_t seed, const std::vector<Vec2>& probes) {
  auto lat = std::make_shared<const QuadratureLattice>(lattice::build_wall_lattices(mesh));
  auto state = wall::init_wall(lat, mesh, init, params);
  const RngPlan plan{seed};

  oracle::WallProblem problem;
  problem.lattice = lat;
  problem.n_copies = params.n_copies;
  problem.omega = lattice::sample_field_on_lattice(*lat, init.omega0);
  problem.wall_x1 = state.wall_x1;
  problem.forcing = init.forcing;
  problem.params = params;
  const auto history = oracle::simulate_wall_brute_force(problem, state.theta, n_steps, plan);

  WallEquivalence eq;
  for (long k = 1; k <= n_steps; ++k) {
    wall::step_wall(state, params, plan);
    const auto ku = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
      eq.max_position_diff =
          std::max(eq.max_position_diff, max_abs_diff(state.positions[i], history.positions[ku][i]));
    }
    for (std::size_t i = 0; i < state.theta.size(); ++i) {
      eq.max_theta_diff = std::max(eq.max_theta_diff, std::abs(state.theta[i] - history.theta[ku][i]));
      eq.max_theta = std::max(eq.max_theta, std::abs(state.theta[i]));
    }
    const auto u = wall::eval_velocity_wall(state, probes, params);
    const auto u_ref = oracle::brute_force_wall_sums(history, problem, probes, ku, ku - 1).u;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      eq.max_velocity_diff = std::max(eq.max_velocity_diff, max_abs_diff(u[i], u_ref[i]));
      eq.max_velocity = std::max(eq.max_velocity, norm(u[i]));
    }
  }
  return eq;
}

std::vector<CheckResult> run_verification() {
  return {check_lattice_count(),     check_wall_cancellation(), check_stress_fd(),
          check_circulation(),       check_heat_oracles(),      check_dense_biot_savart(),
          check_divergence(),        check_quadrature_order(),  check_wall_equivalence()};
}

int print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  int failures = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    failures += c.passed ? 0 : 1;
  }
  out << checks.size() - static_cast<std::size_t>(failures) << "/" << checks.size()
      << " checks passed\n";
  return failures;
}

}  // namespace rvm
