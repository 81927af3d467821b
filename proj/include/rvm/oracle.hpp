#pragma once

// Independent reference computations: exact radial solutions, dense
// quadrature of the Biot-Savart integral, finite differences, and a
// stored-trajectory re-evaluation of the wall-scheme sums.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "rvm/fields.hpp"
#include "rvm/lattice.hpp"
#include "rvm/rng.hpp"
#include "rvm/vec2.hpp"
#include "rvm/wall.hpp"

namespace rvm {

struct RadialSolution {
  std::function<double(double r, double t)> omega_exact;
  std::function<double(double r, double t)> u_theta_exact;
};

namespace oracle {

/// Heat evolution of a * exp(-r^2 / 2w^2):
///   omega = a w^2 / s^2 exp(-r^2 / 2 s^2),  u_theta = Gamma (1 - exp(-r^2 / 2 s^2)) / (2 pi r),
/// with s^2 = w^2 + 2 nu t and Gamma = 2 pi a w^2.
RadialSolution gaussian_solution(double amplitude, double width, double nu);

/// Radial heat-kernel convolution of omega0 (radial about its center):
///   int_0^inf omega0(s) exp(-(r - s)^2 / 4 nu t) I0e(r s / 2 nu t) s ds / (2 nu t),
/// where I0e is the exponentially scaled Bessel function.
double radial_heat_evolution(const VorticityField& omega0, double nu, double t, double r);

/// (1 / r) int_0^r omega(s) s ds, i.e. enclosed circulation / (2 pi r).
double circulation_u_theta(const std::function<double(double)>& omega_radial, double r);

/// int f over the square [-R, R]^2 (R = support_radius) by composite
/// Gauss-Legendre quadrature.
double dense_integral(const std::function<double(Vec2)>& f, double support_radius,
                      int panels_per_axis = 64);

/// max over i of the L1 norm of d^2 f / dx_i^2, with the derivatives taken
/// by central differences and integrated by dense_integral.
double second_derivative_l1(const std::function<double(Vec2)>& f, double support_radius);

/// Singular Biot-Savart integral u(x) = int K(x - y) omega(y) dy of a compactly
/// supported field. A smooth bump P(|x - y|) of radius core_radius splits
/// the integrand: omega (1 - P) K is summed on a fine grid of spacing h_fine,
/// and omega P K is integrated in polar coordinates about x.
class DenseBiotSavart {
 public:
  DenseBiotSavart(VorticityField omega, double h_fine, double core_radius);

  Vec2 operator()(Vec2 x) const;

 private:
  VorticityField omega_;
  double h_;
  double core_;
  std::vector<Vec2> nodes_;
  std::vector<double> samples_;
};

/// Convenience wrapper: h_fine = width / 20 where width = support_radius / 6.
Vec2 dense_biot_savart(const VorticityField& omega, Vec2 x);

/// Central-difference divergence.
double fd_divergence(const std::function<Vec2(Vec2)>& u, Vec2 x, double step);

/// Central-difference curl du2/dx1 - du1/dx2.
double fd_curl(const std::function<Vec2(Vec2)>& u, Vec2 x, double step);

/// Full record of a wall run: positions after each step (copy-major) and
/// the boundary vorticity at the wall nodes at each time level.
struct WallHistory {
  std::vector<std::vector<Vec2>> positions;
  std::vector<std::vector<double>> theta;
};

/// Inputs of the wall sums that do not change along a run.
struct WallProblem {
  std::shared_ptr<const QuadratureLattice> lattice;
  std::size_t n_copies = 1;
  std::vector<double> omega;
  std::vector<double> wall_x1;
  ForcingField forcing;
  WallRunParams params;
};

struct WallSums {
  std::vector<Vec2> u;
  std::vector<double> theta;
};

/// Evaluates the velocity and boundary-vorticity sums directly from the
/// stored paths: particles at time level k_pos, and forcing/source terms
/// l = 0..l_max, each kept iff the path stayed in D at every level l..l_max.
WallSums brute_force_wall_sums(const WallHistory& history, const WallProblem& problem,
                               const std::vector<Vec2>& targets, std::size_t k_pos,
                               std::size_t l_max);

/// Reruns a wall scheme from scratch with brute_force_wall_sums providing
/// every drift and theta. Refuses more than 1e4 node-steps.
WallHistory simulate_wall_brute_force(const WallProblem& problem,
                                      const std::vector<double>& theta0, long n_steps,
                                      const RngPlan& plan);

}  // namespace oracle
}  // namespace rvm
