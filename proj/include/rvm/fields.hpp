#pragma once

// Initial-vorticity and forcing presets.

#include <functional>
#include <string>

#include "rvm/vec2.hpp"

namespace rvm {

/// Compactly supported initial vorticity: eval(z) == 0 for |z - center| > support_radius.
struct VorticityField {
  std::string name;
  std::function<double(Vec2)> eval;
  Vec2 center{};
  double support_radius = 0.0;
  /// True when eval is known to return 0 everywhere.
  bool identically_zero = false;

  double operator()(Vec2 z) const { return eval(z); }
};

/// External vorticity source G(x, t), zero for |x| > support_radius.
struct ForcingField {
  std::string name;
  std::function<double(Vec2, double)> eval;
  double support_radius = 0.0;
  bool identically_zero = false;

  double operator()(Vec2 z, double t) const { return eval(z, t); }
};

/// Physical setup of the impulsively started stream over a wall.
struct WallExperimentSetup {
  double u0_mag = 1.0;
  double g0 = -0.2;
  double nu = 0.01;
  double length_scale = 6.0;

  double reynolds() const { return u0_mag * length_scale / nu; }
};

/// Uniform stream with no-slip wall: velocity, interior vorticity and the
/// wall vorticity used to seed the boundary stress.
struct UniformStream {
  std::function<Vec2(Vec2)> velocity;
  VorticityField omega0;
  std::function<double(double)> theta0;
};

namespace fields {

/// Taper interval of the Gaussian preset, in multiples of its width.
inline constexpr double kGaussianTruncation = 6.0;
inline constexpr double kGaussianTaperStart = 5.5;

/// amplitude * exp(-|z - center|^2 / (2 width^2)), tapered to zero between
/// 5.5 and 6 widths from the center.
VorticityField gaussian_vortex(double amplitude, double width, Vec2 center = {});

VorticityField zero_vorticity();

/// G = g0 for |z| <= window_radius, C2 taper to 0 at window_radius + 1.
ForcingField constant_forcing(double g0, double window_radius);

ForcingField zero_forcing();

/// u0(x) = (u0_mag, 0) for x2 > 0 and 0 on the wall. Interior vorticity is
/// zero; the wall sheet is represented by theta0(x1) = u0_mag / h2.
UniformStream uniform_stream_initial(double u0_mag, double h2);

}  // namespace fields
}  // namespace rvm
