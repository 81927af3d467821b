#pragma once

// Random vortex schemes for the half-plane D = {x2 > 0} with a no-slip wall.
//
// Particles follow the Taylor diffusion in the whole plane. The velocity is
// rebuilt from three sums over the interior nodes (i2 > 0): the initial
// vorticity with its mirrored partner, the accumulated external forcing,
// and the accumulated wall-vorticity source (nu / eps^2) chi(x2 / eps) theta.
// A contribution made at step l only counts while the particle has stayed
// in D ever since, which the accumulators realize by resetting on exit.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "rvm/fields.hpp"
#include "rvm/lattice.hpp"
#include "rvm/rng.hpp"
#include "rvm/summation.hpp"

namespace rvm {

struct WallRunParams {
  double delta = 0.01;
  double eps = 0.05;
  double nu = 0.01;
  double dt = 0.01;
  long n_steps = 300;
  /// 1 gives Scheme 1 (single realization), > 1 the copy average of Scheme 2.
  std::size_t n_copies = 1;
  /// All nodes of a copy share one Brownian path when true.
  bool share_noise = false;
  summation::Backend backend = summation::Backend::parallel;

  void validate() const;
};

struct WallInitialData {
  VorticityField omega0;
  ForcingField forcing;
  std::function<double(double)> theta0;
};

struct WallState {
  std::shared_ptr<const QuadratureLattice> lattice;
  std::size_t n_copies = 1;
  std::size_t n_nodes = 0;
  /// Copy-major: positions[m * n_nodes + n].
  std::vector<Vec2> positions;
  std::vector<double> forcing_acc;
  std::vector<double> stress_acc;
  /// omega0 sampled at the lattice nodes.
  std::vector<double> omega;
  /// Nodes with i2 > 0, the only ones that carry weight.
  std::vector<std::size_t> interior;
  /// Wall nodes x1 = i1 h1, |i1| <= n1, and the boundary vorticity there.
  std::vector<double> wall_x1;
  std::vector<double> theta;
  ForcingField forcing;
  long time_index = 0;
  double dt = 0.0;

  double time() const { return static_cast<double>(time_index) * dt; }
};

namespace wall {

/// Initial data of the impulsively started stream: zero interior vorticity,
/// constant forcing g0 over the outer lattice, theta0 = u0 / h2.
WallInitialData uniform_stream_data(const WallExperimentSetup& setup, const WallMeshParams& mesh);

WallState init_wall(std::shared_ptr<const QuadratureLattice> lat, const WallMeshParams& mesh,
                    const WallInitialData& init, const WallRunParams& p);

/// Linear interpolation of theta between wall nodes, clamped at the ends.
double theta_at(const WallState& state, double x1);

/// Signed sources of the three velocity sums at the current positions.
summation::SourceSet collect_sources(const WallState& state);

Vec2 eval_velocity_wall(const WallState& state, Vec2 x, const WallRunParams& p);

std::vector<Vec2> eval_velocity_wall(const WallState& state, const std::vector<Vec2>& xs,
                                     const WallRunParams& p);

/// Boundary vorticity at the wall nodes from the current state.
std::vector<double> update_theta(const WallState& state, const WallRunParams& p);

/// Adds this step's forcing and wall-source terms at the current positions
/// and zeroes both accumulators for particles outside D.
void accumulate_sources(WallState& state, const WallRunParams& p);

void step_wall(WallState& state, const WallRunParams& p, const RngPlan& plan);

/// Scheme 1: one stream per node (or one for all nodes when shared).
Increment noise_plan_scheme1(const RngPlan& plan, std::size_t node, long step, bool share_noise);
/// Scheme 2: one stream per (copy, node).
Increment noise_plan_scheme2(const RngPlan& plan, std::size_t copy, std::size_t node, long step,
                             bool share_noise);

}  // namespace wall
}  // namespace rvm
