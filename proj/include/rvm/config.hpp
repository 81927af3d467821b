#pragma once

// Run configuration: an INI document with fixed sections. Unknown sections
// and keys are rejected. See README.md for the grammar.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/fields.hpp"
#include "rvm/lattice.hpp"
#include "rvm/summation.hpp"
#include "rvm/vec2.hpp"

namespace rvm {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SchemeChoice { fmcrv, pmcrv, wall1, wall2 };

/// Rectangular probe grid, row-major with x1 varying fastest.
struct ProbeGrid {
  std::string view;
  double x1_min = 0.0;
  double x1_max = 0.0;
  int n_x1 = 1;
  double x2_min = 0.0;
  double x2_max = 0.0;
  int n_x2 = 1;

  std::vector<Vec2> points() const;
  double step_x1() const;
  double step_x2() const;
};

struct SimConfig {
  SchemeChoice scheme = SchemeChoice::fmcrv;
  long n_steps = 0;
  double dt = 0.01;
  std::size_t n_copies = 1;
  std::uint64_t seed = 0;
  long snapshot_every = 0;
  bool share_noise = false;
  summation::Backend backend = summation::Backend::parallel;

  double nu = 0.0;
  double delta = 0.0;
  double big_r = 5.0;
  double eps = 0.05;
  double length_scale = 6.0;

  // Uniform grid (free-space schemes).
  double h = 0.1;
  double extent_r = 5.0;
  // Boundary and outer lattices (wall schemes).
  WallMeshParams mesh;

  std::string initial_preset = "zero";
  double amplitude = 1.0;
  double width = 0.1;
  Vec2 center{};
  double u0 = 1.0;

  std::string forcing_preset = "none";
  double g0 = 0.0;
  /// Radius where G starts to taper; negative means the scheme default.
  double window = -1.0;

  std::vector<ProbeGrid> probes;

  /// Canonical text the run was parsed from, echoed into metadata and hashed.
  std::string source_text;

  bool is_wall() const { return scheme == SchemeChoice::wall1 || scheme == SchemeChoice::wall2; }
  double reynolds() const { return u0 * length_scale / nu; }

  VorticityField initial_field() const;
  ForcingField forcing_field() const;
};

std::string scheme_name(SchemeChoice s);

/// Throws ConfigError on syntax errors (with line), unknown sections or keys,
/// unparsable values, and violated invariants.
SimConfig parse_config(const std::string& text);

SimConfig load_config(const std::string& path);

/// The impulsively started stream over a wall at Re = 600 with 26,042 nodes.
std::string golden_preset_text();

/// Default probe grids for the wall views.
ProbeGrid default_outer_probes();
ProbeGrid default_boundary_probes();

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace rvm
