#include "rvm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "rvm/kernels.hpp"

namespace rvm::oracle {
namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

// exp(-x) I0(x) for x >= 0.
double bessel_i0_scaled(double x) {
  if (x <= 700.0) {
    return boost::math::cyl_bessel_i(0, x) * std::exp(-x);
  }
  const double inv = 1.0 / x;
  const double series = 1.0 + inv * (1.0 / 8.0 + inv * (9.0 / 128.0 + inv * (225.0 / 3072.0)));
  return series / std::sqrt(kTwoPi * x);
}

// C-infinity step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

// 1 on [0, c/2], 0 beyond c.
double core_bump(double r, double c) { return smooth_step((c - r) / (0.5 * c)); }

template <class F>
double integrate_gk(F f, double a, double b) {
  if (!(b > a)) return 0.0;
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

}  // namespace

RadialSolution gaussian_solution(double amplitude, double width, double nu) {
  const double w2 = width * width;
  const double circulation = kTwoPi * amplitude * w2;
  RadialSolution sol;
  sol.omega_exact = [=](double r, double t) {
    const double s2 = w2 + 2.0 * nu * t;
    return amplitude * w2 / s2 * std::exp(-r * r / (2.0 * s2));
  };
  sol.u_theta_exact = [=](double r, double t) {
    if (r == 0.0) return 0.0;
    const double s2 = w2 + 2.0 * nu * t;
    return circulation * -std::expm1(-r * r / (2.0 * s2)) / (kTwoPi * r);
  };
  return sol;
}

double radial_heat_evolution(const VorticityField& omega0, double nu, double t, double r) {
  auto profile = [&](double s) { return omega0(omega0.center + Vec2{s, 0.0}); };
  if (t == 0.0 || nu == 0.0) {
    return profile(r);
  }
  if (t < 0.0 || nu < 0.0) {
    throw std::invalid_argument("radial_heat_evolution: t and nu must be >= 0");
  }
  const double four_nu_t = 4.0 * nu * t;
  const double reach = 12.0 * std::sqrt(2.0 * nu * t);
  const double lo = std::max(0.0, r - reach);
  const double hi = std::min(omega0.support_radius, r + reach);
  auto integrand = [&](double s) {
    const double d = r - s;
    return profile(s) * std::exp(-d * d / four_nu_t) * bessel_i0_scaled(2.0 * r * s / four_nu_t) *
           s;
  };
  return integrate_gk(integrand, lo, hi) * 2.0 / four_nu_t;
}

double circulation_u_theta(const std::function<double(double)>& omega_radial, double r) {
  if (r == 0.0) return 0.0;
  return integrate_gk([&](double s) { return omega_radial(s) * s; }, 0.0, r) / r;
}

double dense_integral(const std::function<double(Vec2)>& f, double support_radius,
                      int panels_per_axis) {
  if (!(support_radius > 0.0) || panels_per_axis < 1) {
    throw std::invalid_argument("dense_integral: need support_radius > 0 and panels >= 1");
  }
  const double width = 2.0 * support_radius / panels_per_axis;
  auto composite = [&](const std::function<double(double)>& g) {
    double sum = 0.0;
    for (int p = 0; p < panels_per_axis; ++p) {
      const double a = -support_radius + p * width;
      sum += gauss<double, 10>::integrate(g, a, a + width);
    }
    return sum;
  };
  return composite([&](double x1) { return composite([&](double x2) { return f({x1, x2}); }); });
}

double second_derivative_l1(const std::function<double(Vec2)>& f, double support_radius) {
  const double s = 1e-4 * support_radius;
  double best = 0.0;
  for (const Vec2 e : {Vec2{s, 0.0}, Vec2{0.0, s}}) {
    auto abs_d2 = [&](Vec2 x) { return std::abs((f(x + e) - 2.0 * f(x) + f(x - e)) / (s * s)); };
    best = std::max(best, dense_integral(abs_d2, support_radius + s, 128));
  }
  return best;
}

DenseBiotSavart::DenseBiotSavart(VorticityField omega, double h_fine, double core_radius)
    : omega_(std::move(omega)), h_(h_fine), core_(core_radius) {
  if (!(h_ > 0.0) || !(core_ > 0.0)) {
    throw std::invalid_argument("DenseBiotSavart: h_fine and core_radius must be > 0");
  }
  if (omega_.identically_zero) return;
  const int n = static_cast<int>(std::ceil(omega_.support_radius / h_));
  for (int j1 = -n; j1 <= n; ++j1) {
    for (int j2 = -n; j2 <= n; ++j2) {
      const Vec2 y = omega_.center + Vec2{j1 * h_, j2 * h_};
      const double w = omega_(y);
      if (w == 0.0) continue;
      nodes_.push_back(y);
      samples_.push_back(w);
    }
  }
}

Vec2 DenseBiotSavart::operator()(Vec2 x) const {
  if (omega_.identically_zero) return {};

  Vec2 far{};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Vec2 z = x - nodes_[i];
    const double r2 = norm2(z);
    if (r2 <= 0.25 * core_ * core_) continue;
    const double keep = 1.0 - core_bump(std::sqrt(r2), core_);
    far += (samples_[i] * keep / r2) * perp(z);
  }
  far = far * (h_ * h_ / kTwoPi);

  // Near part: K(-r e) r dr dphi = -perp(e) / (2 pi) dr dphi.
  constexpr int kAngles = 64;
  const auto& xi = gauss<double, 32>::abscissa();
  const auto& wi = gauss<double, 32>::weights();
  Vec2 near{};
  for (int a = 0; a < kAngles; ++a) {
    const double phi = kTwoPi * a / kAngles;
    const Vec2 e{std::cos(phi), std::sin(phi)};
    double radial = 0.0;
    for (const double lo : {0.0, 0.5 * core_}) {
      const double half = 0.25 * core_;
      const double mid = lo + half;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        for (const double sign : {-1.0, 1.0}) {
          if (k == 0 && sign < 0.0 && xi[0] == 0.0) continue;
          const double r = mid + sign * half * xi[k];
          radial += half * wi[k] * omega_(x + r * e) * core_bump(r, core_);
        }
      }
    }
    near -= radial * perp(e);
  }
  near = near * (1.0 / kAngles);
  return far + near;
}

Vec2 dense_biot_savart(const VorticityField& omega, Vec2 x) {
  const double width = omega.support_radius / 6.0;
  return DenseBiotSavart(omega, width / 20.0, width)(x);
}

double fd_divergence(const std::function<Vec2(Vec2)>& u, Vec2 x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_divergence: step must be > 0");
  const double d1 = (u(x + Vec2{step, 0.0}).x1 - u(x - Vec2{step, 0.0}).x1) / (2.0 * step);
  const double d2 = (u(x + Vec2{0.0, step}).x2 - u(x - Vec2{0.0, step}).x2) / (2.0 * step);
  return d1 + d2;
}

double fd_curl(const std::function<Vec2(Vec2)>& u, Vec2 x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_curl: step must be > 0");
  const double d21 = (u(x + Vec2{step, 0.0}).x2 - u(x - Vec2{step, 0.0}).x2) / (2.0 * step);
  const double d12 = (u(x + Vec2{0.0, step}).x1 - u(x - Vec2{0.0, step}).x1) / (2.0 * step);
  return d21 - d12;
}

// ----------------------------------------------------------------- wall

namespace {

double interpolate_theta(const std::vector<double>& xs, const std::vector<double>& theta,
                         double x1) {
  if (x1 <= xs.front()) return theta.front();
  if (x1 >= xs.back()) return theta.back();
  const auto hi = std::upper_bound(xs.begin(), xs.end(), x1);
  const auto i = static_cast<std::size_t>(hi - xs.begin()) - 1;
  const double s = (x1 - xs[i]) / (xs[i + 1] - xs[i]);
  return (1.0 - s) * theta[i] + s * theta[i + 1];
}

}  // namespace

WallSums brute_force_wall_sums(const WallHistory& history, const WallProblem& problem,
                               const std::vector<Vec2>& targets, std::size_t k_pos,
                               std::size_t l_max) {
  if (k_pos >= history.positions.size() || l_max >= history.theta.size() ||
      l_max >= history.positions.size()) {
    throw std::out_of_range("brute_force_wall_sums: time level outside the stored history");
  }
  const auto& lat = *problem.lattice;
  const auto& p = problem.params;
  const std::size_t n_nodes = lat.size();
  const double source_scale = p.nu / (p.eps * p.eps);
  const double copy_weight = 1.0 / static_cast<double>(problem.n_copies);

  WallSums out;
  out.u.assign(targets.size(), Vec2{});
  out.theta.assign(problem.wall_x1.size(), 0.0);

  for (std::size_t m = 0; m < problem.n_copies; ++m) {
    for (std::size_t n = 0; n < n_nodes; ++n) {
      if (lat.row[n] <= 0) continue;
      const std::size_t idx = m * n_nodes + n;
      const std::size_t mirror = m * n_nodes + static_cast<std::size_t>(lat.mirror_index[n]);

      // Last level <= l_max at which the path is outside D; -1 if none.
      long gamma = -1;
      for (std::size_t j = 0; j <= l_max; ++j) {
        if (!(history.positions[j][idx].x2 > 0.0)) gamma = static_cast<long>(j);
      }
      double forcing_sum = 0.0;
      double stress_sum = 0.0;
      for (std::size_t l = 0; l <= l_max; ++l) {
        if (static_cast<long>(l) <= gamma) continue;
        const Vec2 xl = history.positions[l][idx];
        const double tl = static_cast<double>(l) * p.dt;
        forcing_sum += p.dt * problem.forcing(xl, tl);
        const double chi = kernels::boundary_mollifier_chi(xl.x2 / p.eps);
        stress_sum += p.dt * source_scale * chi *
                      interpolate_theta(problem.wall_x1, history.theta[l], xl.x1);
      }

      const double area = copy_weight * lat.weights[n];
      const double w_direct = area * (problem.omega[n] + forcing_sum + stress_sum);
      const double w_image = -area * problem.omega[n];
      const Vec2 y = history.positions[k_pos][idx];
      const Vec2 y_image = history.positions[k_pos][mirror];

      for (std::size_t i = 0; i < targets.size(); ++i) {
        const bool below = targets[i].x2 < 0.0;
        const Vec2 x = below ? reflect(targets[i]) : targets[i];
        Vec2 u = w_direct * kernels::halfplane_kernel_regularized(x, y, p.delta) +
                 w_image * kernels::halfplane_kernel_regularized(x, y_image, p.delta);
        out.u[i] += below ? reflect(u) : u;
      }
      for (std::size_t i = 0; i < problem.wall_x1.size(); ++i) {
        out.theta[i] += w_direct * kernels::boundary_stress_kernel(y, problem.wall_x1[i], p.delta) +
                        w_image * kernels::boundary_stress_kernel(y_image, problem.wall_x1[i], p.delta);
      }
    }
  }
  return out;
}

WallHistory simulate_wall_brute_force(const WallProblem& problem,
                                      const std::vector<double>& theta0, long n_steps,
                                      const RngPlan& plan) {
  const auto& lat = *problem.lattice;
  const std::size_t n_particles = problem.n_copies * lat.size();
  const double node_steps = static_cast<double>(n_particles) * static_cast<double>(n_steps + 1);
  if (node_steps > 1e4) {
    throw std::length_error("simulate_wall_brute_force: more than 1e4 node-steps requested");
  }
  const auto& p = problem.params;

  WallHistory h;
  std::vector<Vec2> start(n_particles);
  for (std::size_t m = 0; m < problem.n_copies; ++m) {
    std::copy(lat.nodes.begin(), lat.nodes.end(), start.begin() + m * lat.size());
  }
  h.positions.push_back(std::move(start));
  h.theta.push_back(theta0);

  for (long k = 0; k < n_steps; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const auto drift = brute_force_wall_sums(h, problem, h.positions[ku], ku, ku).u;
    std::vector<Vec2> next(n_particles);
    for (std::size_t m = 0; m < problem.n_copies; ++m) {
      for (std::size_t n = 0; n < lat.size(); ++n) {
        const std::size_t i = m * lat.size() + n;
        const Increment inc = problem.n_copies == 1
                                  ? wall::noise_plan_scheme1(plan, n, k, p.share_noise)
                                  : wall::noise_plan_scheme2(plan, m, n, k, p.share_noise);
        next[i] = sde::euler_step(h.positions[ku][i], drift[i], p.nu, p.dt, inc);
      }
    }
    h.positions.push_back(std::move(next));
    h.theta.push_back(brute_force_wall_sums(h, problem, {}, ku + 1, ku).theta);
  }
  return h;
}

}  // namespace rvm::oracle
