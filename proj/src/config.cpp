#include "rvm/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace rvm {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"run",
       {"scheme", "n_steps", "dt", "n_copies", "seed", "snapshot_every", "share_noise", "backend"}},
      {"physics", {"nu", "delta", "big_r", "eps", "length_scale"}},
      {"lattice", {"h", "extent_r", "h0", "h1", "h2", "n0", "n1", "n2"}},
      {"initial", {"preset", "amplitude", "width", "center_x1", "center_x2", "u0"}},
      {"forcing", {"preset", "g0", "window"}},
      {"probes", {"x1_min", "x1_max", "n_x1", "x2_min", "x2_max", "n_x2"}},
      {"probes_outer", {"x1_min", "x1_max", "n_x1", "x2_min", "x2_max", "n_x2"}},
      {"probes_boundary", {"x1_min", "x1_max", "n_x1", "x2_min", "x2_max", "n_x2"}},
  };
  return s;
}

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  const pt::ptree* section(const std::string& name) const {
    const auto it = tree_.find(name);
    return it == tree_.not_found() ? nullptr : &it->second;
  }

  bool has(const std::string& sec, const std::string& key) const {
    const auto* s = section(sec);
    return s && s->find(key) != s->not_found();
  }

  std::string text(const std::string& sec, const std::string& key) const {
    return section(sec)->find(key)->second.data();
  }

  template <class T>
  void number(const std::string& sec, const std::string& key, T& out) const {
    if (!has(sec, key)) return;
    const std::string v = text(sec, key);
    T parsed{};
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), parsed);
    if (ec != std::errc() || end != v.data() + v.size() || v.empty()) {
      fail("[" + sec + "] " + key + ": cannot parse '" + v + "' as a number");
    }
    out = parsed;
  }

  void flag(const std::string& sec, const std::string& key, bool& out) const {
    if (!has(sec, key)) return;
    const std::string v = text(sec, key);
    if (v == "true") {
      out = true;
    } else if (v == "false") {
      out = false;
    } else {
      fail("[" + sec + "] " + key + ": expected true or false, got '" + v + "'");
    }
  }

  void word(const std::string& sec, const std::string& key, std::string& out) const {
    if (has(sec, key)) out = text(sec, key);
  }

 private:
  const pt::ptree& tree_;
};

void check_known_keys(const pt::ptree& tree) {
  for (const auto& [name, body] : tree) {
    const auto it = schema().find(name);
    if (it == schema().end()) {
      if (body.empty() && !body.data().empty()) {
        fail("key '" + name + "' appears outside any section");
      }
      fail("unknown section [" + name + "]");
    }
    for (const auto& [key, value] : body) {
      if (!value.empty()) fail("[" + name + "] " + key + ": nested keys are not allowed");
      if (it->second.count(key) == 0) {
        fail("[" + name + "] unknown key '" + key + "'");
      }
    }
  }
}

ProbeGrid read_probes(const Reader& r, const std::string& sec, ProbeGrid grid) {
  r.number(sec, "x1_min", grid.x1_min);
  r.number(sec, "x1_max", grid.x1_max);
  r.number(sec, "n_x1", grid.n_x1);
  r.number(sec, "x2_min", grid.x2_min);
  r.number(sec, "x2_max", grid.x2_max);
  r.number(sec, "n_x2", grid.n_x2);
  if (grid.n_x1 < 1 || grid.n_x2 < 1) fail("[" + sec + "] n_x1 and n_x2 must be >= 1");
  if (!(grid.x1_min <= grid.x1_max) || !(grid.x2_min <= grid.x2_max)) {
    fail("[" + sec + "] probe window needs x_min <= x_max");
  }
  return grid;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail("invalid config: " + what);
}

void validate(const SimConfig& c) {
  require(c.dt > 0.0, "dt > 0");
  require(c.n_steps >= 0, "n_steps >= 0");
  require(c.n_copies >= 1, "n_copies >= 1");
  require(c.snapshot_every >= 0, "snapshot_every >= 0");
  require(c.nu >= 0.0 && std::isfinite(c.nu), "nu >= 0");
  require(c.delta > 0.0, "delta > 0");
  if (c.scheme == SchemeChoice::pmcrv) {
    require(c.n_copies == 1, "pmcrv runs with n_copies = 1");
  }
  if (c.scheme == SchemeChoice::wall1) {
    require(c.n_copies == 1, "wall1 runs with n_copies = 1 (use wall2 for copies)");
  }
  if (c.is_wall()) {
    require(c.eps > 0.0, "eps > 0");
    require(c.length_scale > 0.0, "length_scale > 0");
    try {
      c.mesh.validate();
    } catch (const std::invalid_argument& e) {
      fail(std::string("invalid config: ") + e.what());
    }
    require(c.initial_preset != "uniform_stream" || c.nu > 0.0,
            "nu > 0 for the uniform_stream preset (Re = u0 L / nu)");
  } else {
    require(c.h > 0.0, "h > 0");
    require(c.extent_r >= 0.0, "extent_r >= 0");
    require(c.big_r > 0.0, "big_r > 0");
    require(c.initial_preset != "uniform_stream", "uniform_stream needs a wall scheme");
  }
  require(c.initial_preset == "zero" || c.initial_preset == "gaussian" ||
              c.initial_preset == "uniform_stream",
          "initial preset is one of zero, gaussian, uniform_stream");
  require(c.forcing_preset == "none" || c.forcing_preset == "constant",
          "forcing preset is one of none, constant");
  if (c.initial_preset == "gaussian") require(c.width > 0.0, "width > 0");
}

}  // namespace

std::vector<Vec2> ProbeGrid::points() const {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n_x1) * static_cast<std::size_t>(n_x2));
  for (int j = 0; j < n_x2; ++j) {
    for (int i = 0; i < n_x1; ++i) {
      pts.push_back({x1_min + i * step_x1(), x2_min + j * step_x2()});
    }
  }
  return pts;
}

double ProbeGrid::step_x1() const { return n_x1 > 1 ? (x1_max - x1_min) / (n_x1 - 1) : 0.0; }
double ProbeGrid::step_x2() const { return n_x2 > 1 ? (x2_max - x2_min) / (n_x2 - 1) : 0.0; }

ProbeGrid default_outer_probes() { return {"outer", -6.0, 6.0, 61, 0.01, 6.0, 31}; }
ProbeGrid default_boundary_probes() { return {"boundary", -6.0, 6.0, 121, 0.001, 0.1, 41}; }

std::string scheme_name(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::fmcrv: return "fmcrv";
    case SchemeChoice::pmcrv: return "pmcrv";
    case SchemeChoice::wall1: return "wall1";
    case SchemeChoice::wall2: return "wall2";
  }
  return "?";
}

VorticityField SimConfig::initial_field() const {
  if (initial_preset == "gaussian") return fields::gaussian_vortex(amplitude, width, center);
  return fields::zero_vorticity();
}

ForcingField SimConfig::forcing_field() const {
  if (forcing_preset != "constant") return fields::zero_forcing();
  double radius = window;
  if (radius < 0.0) {
    radius = is_wall() ? std::sqrt(2.0) * mesh.n0 * mesh.h0 : big_r;
  }
  return fields::constant_forcing(g0, radius);
}

SimConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail("config line " + std::to_string(e.line()) + ": " + e.message());
  }
  check_known_keys(tree);
  const Reader r(tree);

  SimConfig c;
  c.source_text = text;

  if (!r.has("run", "scheme")) fail("[run] scheme is required");
  const std::string scheme = r.text("run", "scheme");
  if (scheme == "fmcrv") {
    c.scheme = SchemeChoice::fmcrv;
  } else if (scheme == "pmcrv") {
    c.scheme = SchemeChoice::pmcrv;
  } else if (scheme == "wall1") {
    c.scheme = SchemeChoice::wall1;
  } else if (scheme == "wall2") {
    c.scheme = SchemeChoice::wall2;
  } else {
    fail("[run] scheme: unknown scheme '" + scheme + "'");
  }
  if (!r.has("run", "seed")) fail("[run] seed is required");
  r.number("run", "seed", c.seed);
  r.number("run", "n_steps", c.n_steps);
  r.number("run", "dt", c.dt);
  r.number("run", "n_copies", c.n_copies);
  r.number("run", "snapshot_every", c.snapshot_every);
  r.flag("run", "share_noise", c.share_noise);
  if (r.has("run", "backend")) {
    const std::string b = r.text("run", "backend");
    if (b == "serial") {
      c.backend = summation::Backend::serial;
    } else if (b == "parallel") {
      c.backend = summation::Backend::parallel;
    } else {
      fail("[run] backend: expected serial or parallel, got '" + b + "'");
    }
  }

  r.number("physics", "nu", c.nu);
  r.number("physics", "delta", c.delta);
  r.number("physics", "big_r", c.big_r);
  r.number("physics", "eps", c.eps);
  r.number("physics", "length_scale", c.length_scale);

  r.number("lattice", "h", c.h);
  r.number("lattice", "extent_r", c.extent_r);
  r.number("lattice", "h0", c.mesh.h0);
  r.number("lattice", "h1", c.mesh.h1);
  r.number("lattice", "h2", c.mesh.h2);
  r.number("lattice", "n0", c.mesh.n0);
  r.number("lattice", "n1", c.mesh.n1);
  r.number("lattice", "n2", c.mesh.n2);

  r.word("initial", "preset", c.initial_preset);
  r.number("initial", "amplitude", c.amplitude);
  r.number("initial", "width", c.width);
  r.number("initial", "center_x1", c.center.x1);
  r.number("initial", "center_x2", c.center.x2);
  r.number("initial", "u0", c.u0);

  r.word("forcing", "preset", c.forcing_preset);
  r.number("forcing", "g0", c.g0);
  r.number("forcing", "window", c.window);

  if (c.is_wall()) {
    if (r.section("probes")) fail("[probes] is for free-space schemes; use [probes_outer]/[probes_boundary]");
    if (r.section("probes_outer") || r.section("probes_boundary")) {
      if (r.section("probes_outer")) {
        c.probes.push_back(read_probes(r, "probes_outer", default_outer_probes()));
      }
      if (r.section("probes_boundary")) {
        c.probes.push_back(read_probes(r, "probes_boundary", default_boundary_probes()));
      }
    } else {
      c.probes = {default_outer_probes(), default_boundary_probes()};
    }
  } else {
    if (r.section("probes_outer") || r.section("probes_boundary")) {
      fail("[probes_outer]/[probes_boundary] are for wall schemes; use [probes]");
    }
    const double e = c.extent_r;
    c.probes.push_back(read_probes(r, "probes", {"field", -e, e, 41, -e, e, 41}));
  }

  validate(c);
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string golden_preset_text() {
  return R"([run]
scheme = wall1
n_steps = 300
dt = 0.01
n_copies = 1
seed = 1
snapshot_every = 10
share_noise = false

[physics]
nu = 0.01
delta = 0.01
eps = 0.05
length_scale = 6

[lattice]
h0 = 0.15
n0 = 40
h1 = 0.1
n1 = 60
h2 = 0.00125
n2 = 80

[initial]
preset = uniform_stream
u0 = 1

[forcing]
preset = constant
g0 = -0.2

[probes_outer]
x1_min = -6
x1_max = 6
n_x1 = 61
x2_min = 0.01
x2_max = 6
n_x2 = 31

[probes_boundary]
x1_min = -6
x1_max = 6
n_x1 = 121
x2_min = 0.001
x2_max = 0.1
n_x2 = 41
)";
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace rvm
