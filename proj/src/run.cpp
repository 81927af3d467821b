#include "rvm/run.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>

#include "rvm/freespace.hpp"
#include "rvm/lattice.hpp"
#include "rvm/snapshot.hpp"
#include "rvm/wall.hpp"

#ifndef RVM_GIT_DESCRIBE
#define RVM_GIT_DESCRIBE "unknown"
#endif

namespace rvm {
namespace {

bool finite(Vec2 v) { return std::isfinite(v.x1) && std::isfinite(v.x2); }

void check_finite(const std::vector<Vec2>& xs, const char* what, long step) {
  for (const Vec2& v : xs) {
    if (!finite(v)) {
      throw RunError(std::string("non-finite ") + what + " at step " + std::to_string(step));
    }
  }
}

void check_finite(const std::vector<double>& xs, const char* what, long step) {
  for (const double v : xs) {
    if (!std::isfinite(v)) {
      throw RunError(std::string("non-finite ") + what + " at step " + std::to_string(step));
    }
  }
}

bool is_snapshot_step(long step, const SimConfig& c) {
  if (step == 0 || step == c.n_steps) return true;
  return c.snapshot_every > 0 && step % c.snapshot_every == 0;
}

std::string snapshot_name(const std::string& view, long step) {
  std::string digits = std::to_string(step);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return "snap_" + view + "_" + digits + ".csv";
}

class Writer {
 public:
  Writer(const SimConfig& c, const RunOptions& o, RunReport& report)
      : config_(c), dir_(o.out_dir), report_(report), hash_(fnv1a(c.source_text)) {
    std::filesystem::create_directories(dir_);
  }

  void write(long step, double time, const std::vector<std::vector<Vec2>>& u_per_view,
             const std::vector<double>& theta_x1, const std::vector<double>& theta) {
    for (std::size_t v = 0; v < config_.probes.size(); ++v) {
      const ProbeGrid& g = config_.probes[v];
      Snapshot s;
      s.config_hash = hash_;
      s.seed = config_.seed;
      s.step = step;
      s.time = time;
      s.view = g.view;
      s.n_x1 = g.n_x1;
      s.n_x2 = g.n_x2;
      s.probes = g.points();
      s.u = u_per_view[v];
      check_finite(s.u, "probe velocity", step);
      s.omega = grid_curl(g, s.u);
      s.theta_x1 = theta_x1;
      s.theta = theta;
      const auto path = (dir_ / snapshot_name(g.view, step)).string();
      write_snapshot(s, path);
      report_.snapshot_files.push_back(path);
    }
  }

 private:
  const SimConfig& config_;
  std::filesystem::path dir_;
  RunReport& report_;
  std::uint64_t hash_;
};

void log_line(const RunOptions& o, const std::string& line) {
  if (o.log) *o.log << line << '\n' << std::flush;
}

void run_freespace(const SimConfig& c, const RunOptions& o, RunReport& report) {
  const auto lat = lattice::build_uniform_grid(c.h, c.extent_r);
  FreespaceParams params{c.delta, c.nu, c.dt, c.big_r, c.backend};
  const SchemeKind kind = c.scheme == SchemeChoice::pmcrv ? SchemeKind::pmcrv : SchemeKind::fmcrv;
  auto state = freespace::init_freespace(lat, c.initial_field(), c.forcing_field(), kind,
                                         c.n_copies, params);
  report.node_count = lat.size();
  const RngPlan plan{c.seed};
  Writer writer(c, o, report);

  auto snapshot = [&](long step) {
    std::vector<std::vector<Vec2>> u;
    for (const auto& g : c.probes) u.push_back(freespace::eval_velocity_free(state, g.points(), params));
    writer.write(step, state.time(), u, {}, {});
  };

  snapshot(0);
  for (long k = 1; k <= c.n_steps; ++k) {
    freespace::step_freespace(state, params, plan);
    check_finite(state.positions, "particle position", k);
    check_finite(state.forcing_acc, "forcing integral", k);
    report.steps_done = k;
    if (is_snapshot_step(k, c)) {
      snapshot(k);
      log_line(o, "step " + std::to_string(k) + " t=" + format_double(state.time()));
    }
  }
}

void run_wall(const SimConfig& c, const RunOptions& o, RunReport& report) {
  auto lat = std::make_shared<const QuadratureLattice>(lattice::build_wall_lattices(c.mesh));
  report.node_count = lat->size();
  for (const auto& w : c.mesh.warnings(c.length_scale, c.reynolds())) log_line(o, "warning: " + w);

  WallRunParams p;
  p.delta = c.delta;
  p.eps = c.eps;
  p.nu = c.nu;
  p.dt = c.dt;
  p.n_steps = c.n_steps;
  p.n_copies = c.n_copies;
  p.share_noise = c.share_noise;
  p.backend = c.backend;

  WallInitialData init{c.initial_field(), c.forcing_field(), nullptr};
  if (c.initial_preset == "uniform_stream") {
    init.theta0 = fields::uniform_stream_initial(c.u0, c.mesh.h2).theta0;
  }
  auto state = wall::init_wall(lat, c.mesh, init, p);
  const RngPlan plan{c.seed};
  Writer writer(c, o, report);

  auto snapshot = [&](long step) {
    std::vector<std::vector<Vec2>> u;
    for (const auto& g : c.probes) u.push_back(wall::eval_velocity_wall(state, g.points(), p));
    writer.write(step, state.time(), u, state.wall_x1, state.theta);
  };

  snapshot(0);
  for (long k = 1; k <= c.n_steps; ++k) {
    wall::step_wall(state, p, plan);
    check_finite(state.positions, "particle position", k);
    check_finite(state.forcing_acc, "forcing integral", k);
    check_finite(state.stress_acc, "wall source integral", k);
    check_finite(state.theta, "boundary vorticity", k);
    report.steps_done = k;
    if (is_snapshot_step(k, c)) {
      snapshot(k);
      log_line(o, "step " + std::to_string(k) + " t=" + format_double(state.time()));
    }
  }
}

void write_meta(const SimConfig& c, const RunOptions& o, const RunReport& r) {
  const auto path = std::filesystem::path(o.out_dir) / "run.meta";
  std::ofstream out(path);
  if (!out) throw RunError("cannot write '" + path.string() + "'");
  out << "scheme = " << scheme_name(c.scheme) << '\n'
      << "seed = " << c.seed << '\n'
      << "config_hash = " << std::hex << fnv1a(c.source_text) << std::dec << '\n'
      << "node_count = " << r.node_count << '\n'
      << "steps = " << r.steps_done << '\n'
      << "snapshot_files = " << r.snapshot_files.size() << '\n'
      << "workers = " << r.workers << '\n'
      << "wall_clock_s = " << format_double(r.wall_clock_s) << '\n'
      << "git_describe = " << RVM_GIT_DESCRIBE << '\n'
      << "[config]\n"
      << c.source_text;
  if (!c.source_text.empty() && c.source_text.back() != '\n') out << '\n';
}

}  // namespace

int apply_workers(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("RVM_WORKERS")) {
      n = std::atoi(env);
      if (n <= 0) throw RunError(std::string("RVM_WORKERS must be a positive integer, got '") + env + "'");
    }
  }
  if (n > 0) omp_set_num_threads(n);
  return n > 0 ? n : omp_get_max_threads();
}

LatticeInfo lattice_info(const SimConfig& c) {
  LatticeInfo info;
  if (c.is_wall()) {
    const auto lat = lattice::build_wall_lattices(c.mesh);
    info.node_count = lat.size();
    for (const NodeTag t : lat.tags) {
      (t == NodeTag::boundary ? info.boundary_nodes : info.outer_nodes) += 1;
    }
    info.warnings = c.mesh.warnings(c.length_scale, c.reynolds());
  } else {
    info.node_count = lattice::build_uniform_grid(c.h, c.extent_r).size();
    info.outer_nodes = info.node_count;
  }
  return info;
}

RunReport run(const SimConfig& c, const RunOptions& o) {
  RunReport report;
  report.workers = apply_workers(o.workers);
  const auto start = std::chrono::steady_clock::now();
  if (c.is_wall()) {
    run_wall(c, o, report);
  } else {
    run_freespace(c, o, report);
  }
  report.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_meta(c, o, report);
  return report;
}

}  // namespace rvm
