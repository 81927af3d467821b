#pragma once

// Snapshot files: CSV with one '#' header line of key=value metadata, the
// probe table (x1,x2,u1,u2,omega), then a '# theta' line and the wall table
// (x1,theta). Numbers are written in shortest round-trip form.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/config.hpp"
#include "rvm/vec2.hpp"

namespace rvm {

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Snapshot {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  long step = 0;
  double time = 0.0;
  std::string view;
  int n_x1 = 0;
  int n_x2 = 0;
  std::vector<Vec2> probes;
  std::vector<Vec2> u;
  /// Curl of u by finite differences on the probe grid.
  std::vector<double> omega;
  std::vector<double> theta_x1;
  std::vector<double> theta;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

/// du2/dx1 - du1/dx2 on a probe grid: central differences inside, one-sided
/// at the edges, 0 along a degenerate axis.
std::vector<double> grid_curl(const ProbeGrid& grid, const std::vector<Vec2>& u);

std::string format_snapshot(const Snapshot& s);
Snapshot parse_snapshot(const std::string& text);

void write_snapshot(const Snapshot& s, const std::string& path);
Snapshot read_snapshot(const std::string& path);

std::string format_double(double v);

}  // namespace rvm
