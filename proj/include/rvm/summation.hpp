#pragma once

// Direct kernel summation over particle sources.
//
// Every operation has two backends. `serial` is the reference: one target
// at a time, built straight from the scalar kernels in rvm/kernels.hpp.
// `parallel` splits targets across OpenMP threads and vectorizes the source
// loop. Each target's sum is accumulated by a single thread in a fixed
// order, so parallel results do not depend on the thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "rvm/vec2.hpp"

namespace rvm::summation {

enum class Backend { serial, parallel };

/// Structure-of-arrays source list: positions and signed weights.
struct SourceSet {
  std::vector<double> x1;
  std::vector<double> x2;
  std::vector<double> w;

  void clear() {
    x1.clear();
    x2.clear();
    w.clear();
  }
  void reserve(std::size_t n) {
    x1.reserve(n);
    x2.reserve(n);
    w.reserve(n);
  }
  void add(Vec2 p, double weight) {
    x1.push_back(p.x1);
    x2.push_back(p.x2);
    w.push_back(weight);
  }
  std::size_t size() const { return w.size(); }
};

/// out[i] = sum_s w_s K_delta(targets[i] - y_s), free-space regularization.
void freespace_velocity(Backend backend, const SourceSet& sources, std::span<const Vec2> targets,
                        double delta, std::span<Vec2> out);

/// out[i] = sum_s w_s K_{D,delta}(targets[i], y_s) for targets with x2 >= 0;
/// below the wall, out = (u1(xbar), -u2(xbar)).
void halfplane_velocity(Backend backend, const SourceSet& sources, std::span<const Vec2> targets,
                        double delta, std::span<Vec2> out);

/// out[i] = sum_s w_s Theta_{D,delta}(y_s, wall_x1[i]).
void boundary_stress(Backend backend, const SourceSet& sources, std::span<const double> wall_x1,
                     double delta, std::span<double> out);

namespace detail {
/// 1 - exp(-t) for t >= 0, written so the source loops vectorize.
double one_minus_exp_neg(double t);
}  // namespace detail

}  // namespace rvm::summation
