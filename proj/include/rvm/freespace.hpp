#pragma once

// Random vortex schemes in the unbounded plane.
//
// FMCRV runs N copies of the whole lattice; every node of copy k is driven
// by the same Brownian path B^k and the velocity averages over copies.
// PMCRV runs one lattice whose nodes carry independent Brownian paths.

#include <cstddef>
#include <vector>

#include "rvm/fields.hpp"
#include "rvm/lattice.hpp"
#include "rvm/rng.hpp"
#include "rvm/summation.hpp"

namespace rvm {

enum class SchemeKind { fmcrv, pmcrv };

struct FreespaceState {
  SchemeKind kind = SchemeKind::fmcrv;
  std::size_t n_copies = 1;
  std::size_t n_nodes = 0;
  /// Copy-major: positions[k * n_nodes + j].
  std::vector<Vec2> positions;
  /// Left Riemann sum of G along each path, same layout as positions.
  std::vector<double> forcing_acc;
  /// Per-node data. Nodes that can never carry vorticity are not tracked;
  /// lattice_index maps back into the lattice.
  std::vector<double> omega_samples;
  std::vector<double> weights;
  std::vector<double> chi_samples;
  std::vector<std::size_t> lattice_index;
  ForcingField forcing;
  long time_index = 0;
  double dt = 0.0;

  double time() const { return static_cast<double>(time_index) * dt; }
  Vec2 position(std::size_t copy, std::size_t node) const {
    return positions[copy * n_nodes + node];
  }
};

struct FreespaceParams {
  double delta = 0.05;
  double nu = 0.05;
  double dt = 0.01;
  double big_r = 5.0;
  summation::Backend backend = summation::Backend::parallel;
};

namespace freespace {

/// Particles start on the lattice nodes with empty forcing integrals. A node
/// is tracked when omega0 is nonzero there or when forcing can reach it
/// (G not identically zero and chi_R > 0). PMCRV requires n_copies == 1.
FreespaceState init_freespace(const QuadratureLattice& lat, const VorticityField& omega0,
                              const ForcingField& forcing, SchemeKind kind, std::size_t n_copies,
                              const FreespaceParams& params);

/// Gathers every particle as a source of weight
/// h^2 (omega0 + acc * chi_R) / N (FMCRV) or without the 1/N (PMCRV).
summation::SourceSet collect_sources(const FreespaceState& state);

Vec2 eval_velocity_free(const FreespaceState& state, Vec2 x, const FreespaceParams& params);

std::vector<Vec2> eval_velocity_free(const FreespaceState& state, const std::vector<Vec2>& xs,
                                     const FreespaceParams& params);

/// One explicit step: accumulate G at the current positions, evaluate the
/// velocity at every particle from the same state, then move all particles.
void step_freespace(FreespaceState& state, const FreespaceParams& params, const RngPlan& plan);

/// Noise stream of a particle: FMCRV shares one path per copy, PMCRV gives
/// each node its own.
Increment freespace_increment(const FreespaceState& state, const RngPlan& plan, std::size_t copy,
                              std::size_t node);

/// Sum of h^2 omega0 over tracked nodes (time invariant).
double total_circulation(const FreespaceState& state);

}  // namespace freespace
}  // namespace rvm
