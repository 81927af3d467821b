#pragma once

// Quadrature lattices: the uniform grid of the free-space schemes and the
// paired boundary/outer lattices of the wall schemes.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rvm/fields.hpp"
#include "rvm/vec2.hpp"

namespace rvm {

enum class NodeTag { boundary, outer };

struct QuadratureLattice {
  std::vector<Vec2> nodes;
  std::vector<double> weights;
  std::vector<NodeTag> tags;
  /// Row index i2 of each node (j2 for the uniform grid).
  std::vector<int> row;
  /// Index of the node mirrored across the wall, or -1 (uniform grid).
  std::vector<std::ptrdiff_t> mirror_index;

  std::size_t size() const { return nodes.size(); }
};

struct WallMeshParams {
  double h0 = 0.15;
  double h1 = 0.1;
  double h2 = 0.00125;
  int n0 = 40;
  int n1 = 60;
  int n2 = 80;

  /// Throws std::invalid_argument on non-positive sizes or counts.
  void validate() const;
  /// Soft constraints: h2 <= h1 <= h0, h2 << L / sqrt(Re), n2 h2 > L / sqrt(Re).
  std::vector<std::string> warnings(double length_scale, double reynolds) const;
  /// (2 n1 + 1)(2 n2 + 1) + (2 n0 + 1)^2.
  std::size_t node_count() const;
};

namespace lattice {

/// Nodes j h with max(|j1|, |j2|) h <= extent_r + 1, each of weight h^2.
QuadratureLattice build_uniform_grid(double h, double extent_r);

/// Boundary lattice (i1 h1, i2 h2), |i1| <= n1, |i2| <= n2, weight h1 h2,
/// row-major in (i1, i2); then outer lattice (i1 h0, i2 h0), weight h0^2.
QuadratureLattice build_wall_lattices(const WallMeshParams& p);

std::vector<double> sample_field_on_lattice(const QuadratureLattice& lat, const VorticityField& f);

/// Grid sum of f at spacing h over the square covering the disc of the
/// given radius.
double grid_sum(const std::function<double(Vec2)>& f, double h, double support_radius);

struct QuadratureStudy {
  double h[3];
  double errors[3];
  /// Mean of log2(e_h / e_{h/2}); +infinity when all errors vanish.
  double order;
};

/// Refinement study of the lattice sum at h, h/2, h/4 against a dense
/// Gauss-Legendre reference integral.
QuadratureStudy quadrature_error_order(const std::function<double(Vec2)>& f, double support_radius,
                                       double h);

}  // namespace lattice
}  // namespace rvm
