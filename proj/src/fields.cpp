#include "rvm/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "rvm/kernels.hpp"

namespace rvm::fields {

VorticityField gaussian_vortex(double amplitude, double width, Vec2 center) {
  if (!(width > 0.0)) {
    throw std::invalid_argument("gaussian_vortex: width must be > 0");
  }
  const double inner = kGaussianTaperStart * width;
  const double outer = kGaussianTruncation * width;
  VorticityField f;
  f.name = "gaussian_vortex";
  f.center = center;
  f.support_radius = outer;
  f.identically_zero = amplitude == 0.0;
  f.eval = [=](Vec2 z) {
    const double r2 = norm2(z - center);
    if (r2 >= outer * outer) return 0.0;
    const double g = amplitude * std::exp(-r2 / (2.0 * width * width));
    return r2 <= inner * inner ? g : g * kernels::radial_taper(std::sqrt(r2), inner, outer);
  };
  return f;
}

VorticityField zero_vorticity() {
  VorticityField f;
  f.name = "zero";
  f.support_radius = 0.0;
  f.identically_zero = true;
  f.eval = [](Vec2) { return 0.0; };
  return f;
}

ForcingField constant_forcing(double g0, double window_radius) {
  if (!(window_radius >= 0.0)) {
    throw std::invalid_argument("constant_forcing: window radius must be >= 0");
  }
  ForcingField f;
  f.name = "constant_forcing";
  f.support_radius = window_radius + 1.0;
  f.identically_zero = g0 == 0.0;
  f.eval = [=](Vec2 z, double) {
    return g0 * kernels::radial_taper(norm(z), window_radius, window_radius + 1.0);
  };
  return f;
}

ForcingField zero_forcing() {
  ForcingField f;
  f.name = "zero";
  f.identically_zero = true;
  f.eval = [](Vec2, double) { return 0.0; };
  return f;
}

UniformStream uniform_stream_initial(double u0_mag, double h2) {
  if (!(h2 > 0.0)) {
    throw std::invalid_argument("uniform_stream_initial: h2 must be > 0");
  }
  UniformStream s;
  s.velocity = [=](Vec2 z) { return z.x2 > 0.0 ? Vec2{u0_mag, 0.0} : Vec2{}; };
  s.omega0 = zero_vorticity();
  s.omega0.name = "uniform_stream";
  const double theta = u0_mag / h2;
  s.theta0 = [=](double) { return theta; };
  return s;
}

}  // namespace rvm::fields
