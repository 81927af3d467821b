#pragma once

// Run orchestration: build the lattice, step the selected scheme, write
// snapshots and the run.meta record.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/config.hpp"

namespace rvm {

class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string out_dir = "out";
  /// OpenMP threads; 0 takes RVM_WORKERS from the environment, else the runtime default.
  int workers = 0;
  /// Progress lines go here when non-null.
  std::ostream* log = nullptr;
};

struct RunReport {
  std::size_t node_count = 0;
  long steps_done = 0;
  std::vector<std::string> snapshot_files;
  double wall_clock_s = 0.0;
  int workers = 1;
};

struct LatticeInfo {
  std::size_t node_count = 0;
  std::size_t boundary_nodes = 0;
  std::size_t outer_nodes = 0;
  std::vector<std::string> warnings;
};

LatticeInfo lattice_info(const SimConfig& config);

/// Throws RunError with the step number when a position, velocity or theta
/// value stops being finite.
RunReport run(const SimConfig& config, const RunOptions& options);

/// Resolves the worker count (argument, then RVM_WORKERS, then the OpenMP
/// default) and applies it.
int apply_workers(int requested);

}  // namespace rvm
