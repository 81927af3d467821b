#include "rvm/wall.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rvm/kernels.hpp"

namespace rvm {

void WallRunParams::validate() const {
  if (!(delta > 0.0) || !(eps > 0.0) || !(nu >= 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("wall run: delta, eps, dt must be > 0 and nu >= 0");
  }
  if (n_steps < 0 || n_copies < 1) {
    throw std::invalid_argument("wall run: n_steps >= 0 and n_copies >= 1 required");
  }
}

namespace wall {

WallInitialData uniform_stream_data(const WallExperimentSetup& setup, const WallMeshParams& mesh) {
  const auto stream = fields::uniform_stream_initial(setup.u0_mag, mesh.h2);
  // Window covers every outer-lattice node.
  const double window = std::sqrt(2.0) * mesh.n0 * mesh.h0;
  return {stream.omega0, fields::constant_forcing(setup.g0, window), stream.theta0};
}

WallState init_wall(std::shared_ptr<const QuadratureLattice> lat, const WallMeshParams& mesh,
                    const WallInitialData& init, const WallRunParams& p) {
  p.validate();
  if (!lat || lat->mirror_index.empty() || lat->mirror_index.front() < 0) {
    throw std::invalid_argument("init_wall: lattice must come from build_wall_lattices");
  }
  WallState st;
  st.lattice = lat;
  st.n_copies = p.n_copies;
  st.n_nodes = lat->size();
  st.forcing = init.forcing;
  st.dt = p.dt;
  st.omega = lattice::sample_field_on_lattice(*lat, init.omega0);
  for (std::size_t n = 0; n < st.n_nodes; ++n) {
    if (lat->row[n] > 0) st.interior.push_back(n);
  }
  st.positions.resize(st.n_copies * st.n_nodes);
  for (std::size_t m = 0; m < st.n_copies; ++m) {
    std::copy(lat->nodes.begin(), lat->nodes.end(), st.positions.begin() + m * st.n_nodes);
  }
  st.forcing_acc.assign(st.positions.size(), 0.0);
  st.stress_acc.assign(st.positions.size(), 0.0);
  for (int i1 = -mesh.n1; i1 <= mesh.n1; ++i1) {
    const double x1 = i1 * mesh.h1;
    st.wall_x1.push_back(x1);
    st.theta.push_back(init.theta0 ? init.theta0(x1) : 0.0);
  }
  return st;
}

double theta_at(const WallState& st, double x1) {
  const auto& xs = st.wall_x1;
  if (xs.size() == 1) return st.theta.front();
  if (x1 <= xs.front()) return st.theta.front();
  if (x1 >= xs.back()) return st.theta.back();
  const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  auto i = static_cast<std::size_t>((x1 - xs.front()) / h);
  i = std::min(i, xs.size() - 2);
  const double s = (x1 - xs[i]) / h;
  return (1.0 - s) * st.theta[i] + s * st.theta[i + 1];
}

summation::SourceSet collect_sources(const WallState& st) {
  summation::SourceSet src;
  src.reserve(2 * st.n_copies * st.interior.size());
  const double copy_weight = 1.0 / static_cast<double>(st.n_copies);
  const auto& lat = *st.lattice;
  for (std::size_t m = 0; m < st.n_copies; ++m) {
    const std::size_t base = m * st.n_nodes;
    for (const std::size_t n : st.interior) {
      const double area = copy_weight * lat.weights[n];
      const Vec2 x = st.positions[base + n];
      if (x.x2 > 0.0) {
        const double strength = st.omega[n] + st.forcing_acc[base + n] + st.stress_acc[base + n];
        if (strength != 0.0) src.add(x, area * strength);
      }
      if (st.omega[n] != 0.0) {
        const Vec2 image = st.positions[base + static_cast<std::size_t>(lat.mirror_index[n])];
        if (image.x2 > 0.0) src.add(image, -area * st.omega[n]);
      }
    }
  }
  return src;
}

Vec2 eval_velocity_wall(const WallState& st, Vec2 x, const WallRunParams& p) {
  return eval_velocity_wall(st, std::vector<Vec2>{x}, p).front();
}

std::vector<Vec2> eval_velocity_wall(const WallState& st, const std::vector<Vec2>& xs,
                                     const WallRunParams& p) {
  const auto src = collect_sources(st);
  std::vector<Vec2> out(xs.size());
  summation::halfplane_velocity(p.backend, src, xs, p.delta, out);
  return out;
}

std::vector<double> update_theta(const WallState& st, const WallRunParams& p) {
  const auto src = collect_sources(st);
  std::vector<double> out(st.wall_x1.size());
  summation::boundary_stress(p.backend, src, st.wall_x1, p.delta, out);
  return out;
}

void accumulate_sources(WallState& st, const WallRunParams& p) {
  const double t = st.time();
  const double source_scale = p.nu / (p.eps * p.eps);
  for (std::size_t i = 0; i < st.positions.size(); ++i) {
    const Vec2 x = st.positions[i];
    if (!(x.x2 > 0.0)) {
      st.forcing_acc[i] = 0.0;
      st.stress_acc[i] = 0.0;
      continue;
    }
    if (!st.forcing.identically_zero) {
      st.forcing_acc[i] += p.dt * st.forcing(x, t);
    }
    const double chi = kernels::boundary_mollifier_chi(x.x2 / p.eps);
    if (chi != 0.0) {
      st.stress_acc[i] += p.dt * source_scale * chi * theta_at(st, x.x1);
    }
  }
}

Increment noise_plan_scheme1(const RngPlan& plan, std::size_t node, long step, bool share_noise) {
  return sde::draw_increment(plan, share_noise ? 0 : node, 0, static_cast<std::uint64_t>(step));
}

Increment noise_plan_scheme2(const RngPlan& plan, std::size_t copy, std::size_t node, long step,
                             bool share_noise) {
  return sde::draw_increment(plan, share_noise ? 0 : node, copy, static_cast<std::uint64_t>(step));
}

void step_wall(WallState& st, const WallRunParams& p, const RngPlan& plan) {
  accumulate_sources(st, p);

  const auto src = collect_sources(st);
  std::vector<Vec2> drift(st.positions.size());
  summation::halfplane_velocity(p.backend, src, st.positions, p.delta, drift);

  for (std::size_t m = 0; m < st.n_copies; ++m) {
    for (std::size_t n = 0; n < st.n_nodes; ++n) {
      const std::size_t i = m * st.n_nodes + n;
      const Increment inc = st.n_copies == 1
                                ? noise_plan_scheme1(plan, n, st.time_index, p.share_noise)
                                : noise_plan_scheme2(plan, m, n, st.time_index, p.share_noise);
      st.positions[i] = sde::euler_step(st.positions[i], drift[i], p.nu, p.dt, inc);
    }
  }
  ++st.time_index;
  st.theta = update_theta(st, p);
}

}  // namespace wall
}  // namespace rvm
