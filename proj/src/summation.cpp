#include "rvm/summation.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "rvm/kernels.hpp"

namespace rvm::summation {
namespace {

// 1 - exp(-t), t >= 0. Cody-Waite reduction t = k ln2 - r with |r| <= ln2/2,
// then expm1(r) by its Taylor polynomial, so the k = 0 branch keeps full
// relative accuracy for small t.
inline double damp_factor(double t) {
  constexpr double kLog2e = 1.4426950408889634074;
  constexpr double kLn2Hi = 6.93147180369123816490e-01;
  constexpr double kLn2Lo = 1.90821492927058770002e-10;
  t = t < 700.0 ? t : 700.0;
  const double k = std::nearbyint(t * kLog2e);
  double r = std::fma(k, kLn2Hi, -t);
  r = std::fma(k, kLn2Lo, r);
  double p = 1.0 / 6227020800.0;  // 1/13!
  p = std::fma(p, r, 1.0 / 479001600.0);
  p = std::fma(p, r, 1.0 / 39916800.0);
  p = std::fma(p, r, 1.0 / 3628800.0);
  p = std::fma(p, r, 1.0 / 362880.0);
  p = std::fma(p, r, 1.0 / 40320.0);
  p = std::fma(p, r, 1.0 / 5040.0);
  p = std::fma(p, r, 1.0 / 720.0);
  p = std::fma(p, r, 1.0 / 120.0);
  p = std::fma(p, r, 1.0 / 24.0);
  p = std::fma(p, r, 1.0 / 6.0);
  p = std::fma(p, r, 0.5);
  p = std::fma(p, r, 1.0);
  const double expm1_r = p * r;
  const auto k_int = static_cast<std::int64_t>(k);
  const double scale = std::bit_cast<double>(static_cast<std::uint64_t>(1023 - k_int) << 52);
  return k_int == 0 ? -expm1_r : 1.0 - scale * (1.0 + expm1_r);
}

void check_sizes(std::size_t targets, std::size_t out) {
  if (targets != out) {
    throw std::invalid_argument("summation: output span size differs from target count");
  }
}

// ---------------------------------------------------------------- serial

void freespace_serial(const SourceSet& s, std::span<const Vec2> targets, double delta,
                      std::span<Vec2> out) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Vec2 acc{};
    for (std::size_t j = 0; j < s.size(); ++j) {
      acc += s.w[j] * kernels::biot_savart_regularized(targets[i] - Vec2{s.x1[j], s.x2[j]}, delta);
    }
    out[i] = acc;
  }
}

void halfplane_serial(const SourceSet& s, std::span<const Vec2> targets, double delta,
                      std::span<Vec2> out) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const bool below = targets[i].x2 < 0.0;
    const Vec2 x = below ? reflect(targets[i]) : targets[i];
    Vec2 acc{};
    for (std::size_t j = 0; j < s.size(); ++j) {
      acc += s.w[j] * kernels::halfplane_kernel_regularized(x, {s.x1[j], s.x2[j]}, delta);
    }
    out[i] = below ? reflect(acc) : acc;
  }
}

void stress_serial(const SourceSet& s, std::span<const double> wall_x1, double delta,
                   std::span<double> out) {
  for (std::size_t i = 0; i < wall_x1.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      acc += s.w[j] * kernels::boundary_stress_kernel({s.x1[j], s.x2[j]}, wall_x1[i], delta);
    }
    out[i] = acc;
  }
}

// -------------------------------------------------------------- parallel

void freespace_parallel(const SourceSet& s, std::span<const Vec2> targets, double delta,
                        std::span<Vec2> out) {
  const double* __restrict sx = s.x1.data();
  const double* __restrict sy = s.x2.data();
  const double* __restrict sw = s.w.data();
  const auto n_src = static_cast<std::ptrdiff_t>(s.size());
  const auto n_tgt = static_cast<std::ptrdiff_t>(targets.size());
  const double inv_two_delta2 = 1.0 / (2.0 * delta * delta);
  constexpr double inv_two_pi = 1.0 / kTwoPi;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n_tgt; ++i) {
    const double tx = targets[i].x1;
    const double ty = targets[i].x2;
    double u1 = 0.0;
    double u2 = 0.0;
#pragma omp simd reduction(+ : u1, u2)
    for (std::ptrdiff_t j = 0; j < n_src; ++j) {
      const double dx = tx - sx[j];
      const double dy = ty - sy[j];
      const double r2 = dx * dx + dy * dy;
      const double f = r2 > 0.0 ? sw[j] * damp_factor(r2 * inv_two_delta2) / r2 : 0.0;
      u1 -= dy * f;
      u2 += dx * f;
    }
    out[i] = {u1 * inv_two_pi, u2 * inv_two_pi};
  }
}

void halfplane_parallel(const SourceSet& s, std::span<const Vec2> targets, double delta,
                        std::span<Vec2> out) {
  const double* __restrict sx = s.x1.data();
  const double* __restrict sy = s.x2.data();
  const double* __restrict sw = s.w.data();
  const auto n_src = static_cast<std::ptrdiff_t>(s.size());
  const auto n_tgt = static_cast<std::ptrdiff_t>(targets.size());
  const double inv_delta2 = 1.0 / (delta * delta);
  constexpr double inv_two_pi = 1.0 / kTwoPi;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n_tgt; ++i) {
    const bool below = targets[i].x2 < 0.0;
    const double tx = targets[i].x1;
    const double ty = below ? -targets[i].x2 : targets[i].x2;
    double u1 = 0.0;
    double u2 = 0.0;
#pragma omp simd reduction(+ : u1, u2)
    for (std::ptrdiff_t j = 0; j < n_src; ++j) {
      const double dx = tx - sx[j];
      const double dy = ty - sy[j];
      const double my = -ty - sy[j];
      const double d2 = dx * dx + dy * dy;
      const double m2 = dx * dx + my * my;
      const bool live = sy[j] > 0.0 && d2 > 0.0;
      const double damp = live ? sw[j] * damp_factor(d2 * inv_delta2) : 0.0;
      const double fd = live ? damp / d2 : 0.0;
      const double fm = live ? damp / m2 : 0.0;
      // perp(d)/d2 - perp(m)/m2 with m = (dx, my).
      u1 += -dy * fd + my * fm;
      u2 += dx * fd - dx * fm;
    }
    u1 *= inv_two_pi;
    u2 *= inv_two_pi;
    out[i] = below ? Vec2{u1, -u2} : Vec2{u1, u2};
  }
}

void stress_parallel(const SourceSet& s, std::span<const double> wall_x1, double delta,
                     std::span<double> out) {
  const double* __restrict sx = s.x1.data();
  const double* __restrict sy = s.x2.data();
  const double* __restrict sw = s.w.data();
  const auto n_src = static_cast<std::ptrdiff_t>(s.size());
  const auto n_wall = static_cast<std::ptrdiff_t>(wall_x1.size());
  const double inv_delta2 = 1.0 / (delta * delta);
  constexpr double inv_pi = 1.0 / kPi;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n_wall; ++i) {
    const double x1 = wall_x1[i];
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::ptrdiff_t j = 0; j < n_src; ++j) {
      const double a = sx[j] - x1;
      const double b = sy[j];
      const double rho2 = a * a + b * b;
      const bool live = b > 0.0;
      const double g = live ? sw[j] * damp_factor(rho2 * inv_delta2) * (a * a - b * b) /
                                  (rho2 * rho2)
                            : 0.0;
      acc += g;
    }
    out[i] = acc * inv_pi;
  }
}

}  // namespace

void freespace_velocity(Backend backend, const SourceSet& sources, std::span<const Vec2> targets,
                        double delta, std::span<Vec2> out) {
  check_sizes(targets.size(), out.size());
  if (backend == Backend::serial) {
    freespace_serial(sources, targets, delta, out);
  } else {
    freespace_parallel(sources, targets, delta, out);
  }
}

void halfplane_velocity(Backend backend, const SourceSet& sources, std::span<const Vec2> targets,
                        double delta, std::span<Vec2> out) {
  check_sizes(targets.size(), out.size());
  if (backend == Backend::serial) {
    halfplane_serial(sources, targets, delta, out);
  } else {
    halfplane_parallel(sources, targets, delta, out);
  }
}

void boundary_stress(Backend backend, const SourceSet& sources, std::span<const double> wall_x1,
                     double delta, std::span<double> out) {
  if (wall_x1.size() != out.size()) {
    throw std::invalid_argument("boundary_stress: output span size differs from wall node count");
  }
  if (backend == Backend::serial) {
    stress_serial(sources, wall_x1, delta, out);
  } else {
    stress_parallel(sources, wall_x1, delta, out);
  }
}

namespace detail {
double one_minus_exp_neg(double t) { return damp_factor(t); }
}  // namespace detail

}  // namespace rvm::summation
