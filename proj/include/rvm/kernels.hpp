#pragma once

// Closed-form Biot-Savart kernels, their regularizations, and the cutoff
// and mollifier profiles used by the random vortex schemes.
//
// Two Gaussian regularizations coexist on purpose: the free-space schemes
// damp the kernel with (1 - exp(-|z|^2 / (2 delta^2))), the half-plane
// schemes with (1 - exp(-|z|^2 / delta^2)).

#include <stdexcept>
#include <string>
#include <vector>

#include "rvm/vec2.hpp"

namespace rvm {

/// Raised when a kernel is evaluated on its singular set.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

namespace kernels {

struct KernelParams {
  double delta = 0.0;
  double big_r = 0.0;
  double epsilon = 0.0;

  /// Throws std::invalid_argument unless every field is strictly positive.
  /// Returns non-fatal warnings (delta not small compared to R).
  std::vector<std::string> validate() const;
};

/// K(z) = z^perp / (2 pi |z|^2).
Vec2 biot_savart_free(Vec2 z);

/// K_delta(z) = (1 - exp(-|z|^2 / (2 delta^2))) K(z); total, zero at z = 0.
Vec2 biot_savart_regularized(Vec2 z, double delta);

/// exp(-|z|^2 / (2 delta^2)); bounds |K_delta - K| |z| from above.
double epsilon_delta(Vec2 z, double delta);

/// 6t^5 - 15t^4 + 10t^3 clamped to [0, 1]; C2 with vanishing first and
/// second derivatives at both ends.
double smoothstep5(double t);

/// C2 radial taper: 1 for r <= inner, 0 for r >= outer.
double radial_taper(double r, double inner, double outer);

/// Localization cutoff: 1 for |z| <= R, 0 for |z| >= R + 1.
double cutoff_chi_r(Vec2 z, double big_r);

/// Half-plane image kernel evaluated at target x for a vortex at y:
///   (1/2pi) ((x - y)^perp / |x - y|^2 - (xbar - y)^perp / |xbar - y|^2).
/// Vanishes identically for targets on the wall.
Vec2 halfplane_kernel(Vec2 x, Vec2 y);

/// Regularized half-plane kernel for target x and particle y:
///   1_D(y) (1 - exp(-|y - x|^2 / delta^2)) halfplane_kernel(x, y).
/// Zero whenever y2 <= 0 and at y = x.
Vec2 halfplane_kernel_regularized(Vec2 x, Vec2 y, double delta);

/// Wall shear kernel: minus the x2-derivative at x2 = 0+ of the first
/// component of halfplane_kernel_regularized((x1, x2), y, delta).
double boundary_stress_kernel(Vec2 y, double x1, double delta);

/// Boundary mollifier: 162 (2r - 1) on [1/3, 2/3], zero elsewhere.
double boundary_mollifier_chi(double r);

}  // namespace kernels
}  // namespace rvm
