#pragma once

// Brownian increments and the Euler-Maruyama update shared by every scheme.
//
// Increments come from a counter-based generator keyed by the master seed
// and indexed by (particle, copy, step), so a draw does not depend on which
// thread asks for it or in which order.

#include <array>
#include <cstdint>

#include "rvm/vec2.hpp"

namespace rvm {

struct RngPlan {
  std::uint64_t master_seed = 0;
};

/// Pair of independent standard normals (B_{k+1} - B_k) / sqrt(dt).
struct Increment {
  Vec2 dphi;
};

namespace sde {

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

Increment draw_increment(const RngPlan& plan, std::uint64_t particle_id, std::uint64_t copy_id,
                         std::uint64_t step);

/// x + dt * drift + sqrt(2 nu dt) * inc.dphi
Vec2 euler_step(Vec2 x, Vec2 drift, double nu, double dt, const Increment& inc);

}  // namespace sde
}  // namespace rvm
