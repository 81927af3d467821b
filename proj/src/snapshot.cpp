#include "rvm/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace rvm {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw SnapshotError(msg); }

template <class T>
T parse_number(std::string_view v, const std::string& what) {
  T out{};
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) {
    fail("snapshot: cannot parse " + what + " '" + std::string(v) + "'");
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(16 - static_cast<std::size_t>(end - buf), '0') + std::string(buf, end);
}

constexpr const char* kProbeColumns = "x1,x2,u1,u2,omega";
constexpr const char* kThetaColumns = "x1,theta";

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::vector<double> grid_curl(const ProbeGrid& g, const std::vector<Vec2>& u) {
  const auto n1 = static_cast<std::size_t>(g.n_x1);
  const auto n2 = static_cast<std::size_t>(g.n_x2);
  if (u.size() != n1 * n2) {
    throw std::invalid_argument("grid_curl: velocity count differs from the probe grid size");
  }
  auto at = [&](std::size_t i, std::size_t j) { return u[j * n1 + i]; };
  std::vector<double> curl(u.size(), 0.0);
  for (std::size_t j = 0; j < n2; ++j) {
    for (std::size_t i = 0; i < n1; ++i) {
      double d21 = 0.0;
      if (n1 > 1) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == n1 ? i : i + 1;
        d21 = (at(hi, j).x2 - at(lo, j).x2) / (static_cast<double>(hi - lo) * g.step_x1());
      }
      double d12 = 0.0;
      if (n2 > 1) {
        const std::size_t lo = j == 0 ? 0 : j - 1;
        const std::size_t hi = j + 1 == n2 ? j : j + 1;
        d12 = (at(i, hi).x1 - at(i, lo).x1) / (static_cast<double>(hi - lo) * g.step_x2());
      }
      curl[j * n1 + i] = d21 - d12;
    }
  }
  return curl;
}

std::string format_snapshot(const Snapshot& s) {
  if (s.u.size() != s.probes.size() || s.omega.size() != s.probes.size() ||
      s.theta.size() != s.theta_x1.size()) {
    throw SnapshotError("format_snapshot: column lengths differ");
  }
  std::string out;
  out += "# rvm_snapshot=1 config_hash=" + hex64(s.config_hash) +
         " seed=" + std::to_string(s.seed) + " step=" + std::to_string(s.step) +
         " time=" + format_double(s.time) + " view=" + s.view + " n_x1=" + std::to_string(s.n_x1) +
         " n_x2=" + std::to_string(s.n_x2) + " probes=" + std::to_string(s.probes.size()) +
         " theta=" + std::to_string(s.theta.size()) + "\n";
  out += kProbeColumns;
  out += '\n';
  for (std::size_t i = 0; i < s.probes.size(); ++i) {
    out += format_double(s.probes[i].x1) + ',' + format_double(s.probes[i].x2) + ',' +
           format_double(s.u[i].x1) + ',' + format_double(s.u[i].x2) + ',' +
           format_double(s.omega[i]) + '\n';
  }
  out += "# theta\n";
  out += kThetaColumns;
  out += '\n';
  for (std::size_t i = 0; i < s.theta.size(); ++i) {
    out += format_double(s.theta_x1[i]) + ',' + format_double(s.theta[i]) + '\n';
  }
  return out;
}

Snapshot parse_snapshot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) fail(std::string("snapshot: missing ") + what);
    ++line_no;
    return std::string_view(line);
  };
  auto where = [&] { return "line " + std::to_string(line_no); };

  std::string_view header = next("header");
  if (header.substr(0, 2) != "# ") fail("snapshot: header must start with '# '");
  std::map<std::string, std::string> meta;
  for (const auto field : split(header.substr(2), ' ')) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) fail("snapshot: header field without '=': " + std::string(field));
    meta[std::string(field.substr(0, eq))] = std::string(field.substr(eq + 1));
  }
  for (const char* key : {"rvm_snapshot", "config_hash", "seed", "step", "time", "view", "n_x1",
                          "n_x2", "probes", "theta"}) {
    if (meta.count(key) == 0) fail(std::string("snapshot: header lacks '") + key + "'");
  }
  if (meta["rvm_snapshot"] != "1") fail("snapshot: unsupported version " + meta["rvm_snapshot"]);

  Snapshot s;
  {
    const std::string& h = meta["config_hash"];
    const auto [end, ec] = std::from_chars(h.data(), h.data() + h.size(), s.config_hash, 16);
    if (h.size() != 16 || ec != std::errc() || end != h.data() + h.size()) {
      fail("snapshot: bad config_hash '" + h + "'");
    }
  }
  s.seed = parse_number<std::uint64_t>(meta["seed"], "seed");
  s.step = parse_number<long>(meta["step"], "step");
  s.time = parse_number<double>(meta["time"], "time");
  s.view = meta["view"];
  s.n_x1 = parse_number<int>(meta["n_x1"], "n_x1");
  s.n_x2 = parse_number<int>(meta["n_x2"], "n_x2");
  const auto n_probes = parse_number<std::size_t>(meta["probes"], "probes");
  const auto n_theta = parse_number<std::size_t>(meta["theta"], "theta");

  if (next("probe columns") != kProbeColumns) fail("snapshot: probe table header mismatch");
  for (std::size_t i = 0; i < n_probes; ++i) {
    const auto cols = split(next("probe row"), ',');
    if (cols.size() != 5) {
      fail("snapshot: " + where() + ": expected 5 columns, found " + std::to_string(cols.size()));
    }
    s.probes.push_back({parse_number<double>(cols[0], "x1"), parse_number<double>(cols[1], "x2")});
    s.u.push_back({parse_number<double>(cols[2], "u1"), parse_number<double>(cols[3], "u2")});
    s.omega.push_back(parse_number<double>(cols[4], "omega"));
  }
  if (next("theta marker") != "# theta") fail("snapshot: " + where() + ": expected '# theta'");
  if (next("theta columns") != kThetaColumns) fail("snapshot: theta table header mismatch");
  for (std::size_t i = 0; i < n_theta; ++i) {
    const auto cols = split(next("theta row"), ',');
    if (cols.size() != 2) {
      fail("snapshot: " + where() + ": expected 2 columns, found " + std::to_string(cols.size()));
    }
    s.theta_x1.push_back(parse_number<double>(cols[0], "x1"));
    s.theta.push_back(parse_number<double>(cols[1], "theta"));
  }
  if (std::getline(in, line)) fail("snapshot: trailing data after " + where());
  return s;
}

void write_snapshot(const Snapshot& s, const std::string& path) {
  const std::string text = format_snapshot(s);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) fail("write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_snapshot(buf.str());
  } catch (const SnapshotError& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace rvm
