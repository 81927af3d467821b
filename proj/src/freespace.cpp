#include "rvm/freespace.hpp"

#include <stdexcept>

#include "rvm/kernels.hpp"

namespace rvm::freespace {

FreespaceState init_freespace(const QuadratureLattice& lat, const VorticityField& omega0,
                              const ForcingField& forcing, SchemeKind kind, std::size_t n_copies,
                              const FreespaceParams& params) {
  if (n_copies < 1) {
    throw std::invalid_argument("init_freespace: n_copies must be >= 1");
  }
  if (kind == SchemeKind::pmcrv && n_copies != 1) {
    throw std::invalid_argument("init_freespace: PMCRV runs exactly one path family (n_copies = 1)");
  }
  if (!(params.dt > 0.0)) {
    throw std::invalid_argument("init_freespace: dt must be > 0");
  }

  FreespaceState st;
  st.kind = kind;
  st.n_copies = n_copies;
  st.forcing = forcing;
  st.dt = params.dt;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const double w0 = omega0(lat.nodes[i]);
    const double chi = kernels::cutoff_chi_r(lat.nodes[i], params.big_r);
    const bool reachable = !forcing.identically_zero && chi > 0.0;
    if (w0 == 0.0 && !reachable) continue;
    st.omega_samples.push_back(w0);
    st.chi_samples.push_back(chi);
    st.weights.push_back(lat.weights[i]);
    st.lattice_index.push_back(i);
  }
  st.n_nodes = st.lattice_index.size();
  st.positions.resize(st.n_copies * st.n_nodes);
  st.forcing_acc.assign(st.n_copies * st.n_nodes, 0.0);
  for (std::size_t k = 0; k < st.n_copies; ++k) {
    for (std::size_t j = 0; j < st.n_nodes; ++j) {
      st.positions[k * st.n_nodes + j] = lat.nodes[st.lattice_index[j]];
    }
  }
  return st;
}

summation::SourceSet collect_sources(const FreespaceState& st) {
  summation::SourceSet src;
  src.reserve(st.positions.size());
  const double copy_weight = 1.0 / static_cast<double>(st.n_copies);
  for (std::size_t k = 0; k < st.n_copies; ++k) {
    for (std::size_t j = 0; j < st.n_nodes; ++j) {
      const std::size_t p = k * st.n_nodes + j;
      const double strength = st.omega_samples[j] + st.forcing_acc[p] * st.chi_samples[j];
      if (strength == 0.0) continue;
      src.add(st.positions[p], copy_weight * st.weights[j] * strength);
    }
  }
  return src;
}

Vec2 eval_velocity_free(const FreespaceState& state, Vec2 x, const FreespaceParams& params) {
  return eval_velocity_free(state, std::vector<Vec2>{x}, params).front();
}

std::vector<Vec2> eval_velocity_free(const FreespaceState& state, const std::vector<Vec2>& xs,
                                     const FreespaceParams& params) {
  const auto src = collect_sources(state);
  std::vector<Vec2> out(xs.size());
  summation::freespace_velocity(params.backend, src, xs, params.delta, out);
  return out;
}

Increment freespace_increment(const FreespaceState& state, const RngPlan& plan, std::size_t copy,
                              std::size_t node) {
  const auto step = static_cast<std::uint64_t>(state.time_index);
  if (state.kind == SchemeKind::fmcrv) {
    return sde::draw_increment(plan, 0, copy, step);
  }
  return sde::draw_increment(plan, state.lattice_index[node], 0, step);
}

void step_freespace(FreespaceState& st, const FreespaceParams& params, const RngPlan& plan) {
  if (!(params.dt > 0.0)) {
    throw std::invalid_argument("step_freespace: dt must be > 0");
  }
  const double t = st.time();
  if (!st.forcing.identically_zero) {
    for (std::size_t p = 0; p < st.positions.size(); ++p) {
      st.forcing_acc[p] += params.dt * st.forcing(st.positions[p], t);
    }
  }

  const auto src = collect_sources(st);
  std::vector<Vec2> drift(st.positions.size());
  summation::freespace_velocity(params.backend, src, st.positions, params.delta, drift);

  for (std::size_t k = 0; k < st.n_copies; ++k) {
    // One shared increment per copy for FMCRV.
    const Increment shared = freespace_increment(st, plan, k, 0);
    for (std::size_t j = 0; j < st.n_nodes; ++j) {
      const std::size_t p = k * st.n_nodes + j;
      const Increment inc =
          st.kind == SchemeKind::fmcrv ? shared : freespace_increment(st, plan, k, j);
      st.positions[p] = sde::euler_step(st.positions[p], drift[p], params.nu, params.dt, inc);
    }
  }
  ++st.time_index;
}

double total_circulation(const FreespaceState& st) {
  double sum = 0.0;
  for (std::size_t j = 0; j < st.n_nodes; ++j) {
    sum += st.weights[j] * st.omega_samples[j];
  }
  return sum;
}

}  // namespace rvm::freespace
