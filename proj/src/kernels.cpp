#include "rvm/kernels.hpp"

#include <cmath>
#include <sstream>

namespace rvm::kernels {

std::vector<std::string> KernelParams::validate() const {
  auto require_positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "kernel parameter " << name << " must be finite and > 0 (got " << v << ")";
      throw std::invalid_argument(msg.str());
    }
  };
  require_positive(delta, "delta");
  require_positive(big_r, "big_r");
  require_positive(epsilon, "epsilon");

  std::vector<std::string> warnings;
  if (delta >= 0.1 * big_r) {
    std::ostringstream msg;
    msg << "delta = " << delta << " is not small compared to R = " << big_r;
    warnings.push_back(msg.str());
  }
  return warnings;
}

Vec2 biot_savart_free(Vec2 z) {
  const double r2 = norm2(z);
  if (r2 == 0.0) {
    throw DomainError("biot_savart_free: singular at z = 0");
  }
  return perp(z) / (kTwoPi * r2);
}

Vec2 biot_savart_regularized(Vec2 z, double delta) {
  const double r2 = norm2(z);
  if (r2 == 0.0) {
    return {};
  }
  const double damp = -std::expm1(-r2 / (2.0 * delta * delta));
  return perp(z) * (damp / (kTwoPi * r2));
}

double epsilon_delta(Vec2 z, double delta) {
  return std::exp(-norm2(z) / (2.0 * delta * delta));
}

double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

double radial_taper(double r, double inner, double outer) {
  if (r <= inner) return 1.0;
  if (r >= outer) return 0.0;
  return smoothstep5((outer - r) / (outer - inner));
}

double cutoff_chi_r(Vec2 z, double big_r) {
  return radial_taper(norm(z), big_r, big_r + 1.0);
}

Vec2 halfplane_kernel(Vec2 x, Vec2 y) {
  const Vec2 direct = x - y;
  const Vec2 image = reflect(x) - y;
  const double d2 = norm2(direct);
  const double i2 = norm2(image);
  if (d2 == 0.0 || i2 == 0.0) {
    throw DomainError("halfplane_kernel: target coincides with the vortex or its image");
  }
  return (perp(direct) / d2 - perp(image) / i2) / kTwoPi;
}

Vec2 halfplane_kernel_regularized(Vec2 x, Vec2 y, double delta) {
  if (!(y.x2 > 0.0)) {
    return {};
  }
  const Vec2 direct = x - y;
  const Vec2 image = reflect(x) - y;
  const double d2 = norm2(direct);
  const double i2 = norm2(image);
  if (i2 == 0.0) {
    throw DomainError("halfplane_kernel_regularized: particle sits on the image of the target");
  }
  if (d2 == 0.0) {
    return {};
  }
  const double damp = -std::expm1(-d2 / (delta * delta));
  return (perp(direct) / d2 - perp(image) / i2) * (damp / kTwoPi);
}

double boundary_stress_kernel(Vec2 y, double x1, double delta) {
  if (!(y.x2 > 0.0)) {
    return 0.0;
  }
  // At x2 = 0 the bracket of the half-plane kernel vanishes, so only its
  // own derivative survives; the Gaussian factor is evaluated at the wall.
  const double a = y.x1 - x1;
  const double rho2 = a * a + y.x2 * y.x2;
  const double damp = -std::expm1(-rho2 / (delta * delta));
  return damp * (a * a - y.x2 * y.x2) / (kPi * rho2 * rho2);
}

double boundary_mollifier_chi(double r) {
  if (r < 1.0 / 3.0 || r > 2.0 / 3.0) {
    return 0.0;
  }
  return 162.0 * (2.0 * r - 1.0);
}

}  // namespace rvm::kernels
