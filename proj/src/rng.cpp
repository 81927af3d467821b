#include "rvm/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "rvm/kernels.hpp"

namespace rvm::sde {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

// 53 random bits mapped to (0, 1].
inline double to_unit_open_closed(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) ^ (lo >> 11);
  return (static_cast<double>(bits & ((1ull << 53) - 1)) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

Increment draw_increment(const RngPlan& plan, std::uint64_t particle_id, std::uint64_t copy_id,
                         std::uint64_t step) {
  if (particle_id > 0xFFFFFFFFull || copy_id > 0xFFFFFFFFull || step > 0xFFFFFFFFull) {
    throw std::out_of_range("draw_increment: ids must fit in 32 bits");
  }
  const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(plan.master_seed),
                                         static_cast<std::uint32_t>(plan.master_seed >> 32)};
  const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(particle_id),
                                         static_cast<std::uint32_t>(copy_id),
                                         static_cast<std::uint32_t>(step), 0u};
  const auto out = philox4x32(ctr, key);
  // Box-Muller.
  const double u1 = to_unit_open_closed(out[0], out[1]);
  const double u2 = to_unit_open_closed(out[2], out[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = kTwoPi * u2;
  return {{radius * std::cos(angle), radius * std::sin(angle)}};
}

Vec2 euler_step(Vec2 x, Vec2 drift, double nu, double dt, const Increment& inc) {
  const double noise = std::sqrt(2.0 * nu * dt);
  return {x.x1 + dt * drift.x1 + noise * inc.dphi.x1, x.x2 + dt * drift.x2 + noise * inc.dphi.x2};
}

}  // namespace rvm::sde
