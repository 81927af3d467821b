#include "rvm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rvm/oracle.hpp"

namespace rvm {

void WallMeshParams::validate() const {
  if (!(h0 > 0.0) || !(h1 > 0.0) || !(h2 > 0.0)) {
    std::ostringstream msg;
    msg << "wall mesh sizes must be > 0 (h0=" << h0 << ", h1=" << h1 << ", h2=" << h2 << ")";
    throw std::invalid_argument(msg.str());
  }
  if (n0 < 0 || n1 < 0 || n2 < 0) {
    throw std::invalid_argument("wall lattice counts n0, n1, n2 must be >= 0");
  }
}

std::vector<std::string> WallMeshParams::warnings(double length_scale, double reynolds) const {
  std::vector<std::string> out;
  if (!(h2 <= h1 && h1 <= h0)) {
    out.emplace_back("mesh sizes should satisfy h2 <= h1 <= h0");
  }
  const double layer = length_scale / std::sqrt(reynolds);
  if (!(h2 < 0.1 * layer)) {
    std::ostringstream msg;
    msg << "h2 = " << h2 << " does not resolve the boundary layer thickness L/sqrt(Re) = " << layer;
    out.push_back(msg.str());
  }
  if (!(n2 * h2 > layer)) {
    std::ostringstream msg;
    msg << "boundary lattice height n2*h2 = " << n2 * h2 << " is below L/sqrt(Re) = " << layer;
    out.push_back(msg.str());
  }
  return out;
}

std::size_t WallMeshParams::node_count() const {
  const auto b1 = static_cast<std::size_t>(2 * n1 + 1);
  const auto b2 = static_cast<std::size_t>(2 * n2 + 1);
  const auto o = static_cast<std::size_t>(2 * n0 + 1);
  return b1 * b2 + o * o;
}

namespace lattice {

QuadratureLattice build_uniform_grid(double h, double extent_r) {
  if (!(h > 0.0) || !(extent_r >= 0.0)) {
    throw std::invalid_argument("build_uniform_grid: need h > 0 and extent_r >= 0");
  }
  const double reach = extent_r + 1.0;
  const int jmax = static_cast<int>(std::floor(reach / h + 1e-9));
  QuadratureLattice lat;
  for (int j1 = -jmax; j1 <= jmax; ++j1) {
    for (int j2 = -jmax; j2 <= jmax; ++j2) {
      lat.nodes.push_back({j1 * h, j2 * h});
      lat.weights.push_back(h * h);
      lat.tags.push_back(NodeTag::outer);
      lat.row.push_back(j2);
      lat.mirror_index.push_back(-1);
    }
  }
  return lat;
}

QuadratureLattice build_wall_lattices(const WallMeshParams& p) {
  p.validate();
  QuadratureLattice lat;
  lat.nodes.reserve(p.node_count());

  auto add_block = [&lat](int n_a, int n_b, double h_a, double h_b, NodeTag tag) {
    const std::size_t base = lat.nodes.size();
    const int rows = 2 * n_b + 1;
    for (int i1 = -n_a; i1 <= n_a; ++i1) {
      for (int i2 = -n_b; i2 <= n_b; ++i2) {
        lat.nodes.push_back({i1 * h_a, i2 * h_b});
        lat.weights.push_back(h_a * h_b);
        lat.tags.push_back(tag);
        lat.row.push_back(i2);
        // Row-major in (i1, i2): the mirror of i2 sits at -i2 in the same column.
        const std::size_t column = base + static_cast<std::size_t>(i1 + n_a) * rows;
        lat.mirror_index.push_back(static_cast<std::ptrdiff_t>(column + (n_b - i2)));
      }
    }
  };
  add_block(p.n1, p.n2, p.h1, p.h2, NodeTag::boundary);
  add_block(p.n0, p.n0, p.h0, p.h0, NodeTag::outer);
  return lat;
}

std::vector<double> sample_field_on_lattice(const QuadratureLattice& lat, const VorticityField& f) {
  std::vector<double> out(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out[i] = f(lat.nodes[i]);
  }
  return out;
}

double grid_sum(const std::function<double(Vec2)>& f, double h, double support_radius) {
  const int jmax = static_cast<int>(std::ceil(support_radius / h)) + 1;
  double sum = 0.0;
  for (int j1 = -jmax; j1 <= jmax; ++j1) {
    double column = 0.0;
    for (int j2 = -jmax; j2 <= jmax; ++j2) {
      column += f({j1 * h, j2 * h});
    }
    sum += column;
  }
  return sum * h * h;
}

QuadratureStudy quadrature_error_order(const std::function<double(Vec2)>& f, double support_radius,
                                       double h) {
  const double reference = oracle::dense_integral(f, support_radius);
  QuadratureStudy study{};
  for (int level = 0; level < 3; ++level) {
    study.h[level] = h / static_cast<double>(1 << level);
    study.errors[level] = std::abs(grid_sum(f, study.h[level], support_radius) - reference);
  }
  // Errors at the level of the reference's own rounding carry no rate information.
  const double floor = 1e-14 * std::max(1.0, std::abs(reference));
  double total = 0.0;
  int pairs = 0;
  for (int level = 0; level < 2; ++level) {
    if (study.errors[level] <= floor) continue;
    total += std::log2(study.errors[level] / std::max(study.errors[level + 1], floor));
    ++pairs;
  }
  study.order = pairs == 0 ? std::numeric_limits<double>::infinity() : total / pairs;
  return study;
}

}  // namespace lattice
}  // namespace rvm
