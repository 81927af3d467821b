#pragma once

// Oracle self-checks behind `rvm verify`, and the wall-scheme equivalence
// harness shared with the tests.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rvm/lattice.hpp"
#include "rvm/wall.hpp"

namespace rvm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct WallEquivalence {
  double max_position_diff = 0.0;
  double max_theta_diff = 0.0;
  double max_velocity_diff = 0.0;
  /// Largest magnitudes seen, for context.
  double max_theta = 0.0;
  double max_velocity = 0.0;
};

/// Steps the accumulator implementation and the stored-trajectory oracle
/// side by side for n_steps and records the largest disagreements in
/// positions, theta and the velocity at the given probes.
WallEquivalence compare_wall_with_brute_force(const WallMeshParams& mesh,
                                              const WallInitialData& init,
                                              const WallRunParams& params, long n_steps,
                                              std::uint64_t seed, const std::vector<Vec2>& probes);

/// Small instance used by the equivalence checks: (2,2,2) lattices, a
/// Gaussian interior vortex off the wall, constant forcing and a seeded
/// boundary vorticity.
struct TinyWallInstance {
  WallMeshParams mesh;
  WallInitialData init;
  WallRunParams params;
  std::vector<Vec2> probes;
};
TinyWallInstance tiny_wall_instance();

std::vector<CheckResult> run_verification();

/// Prints one line per check; returns the number of failures.
int print_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace rvm
