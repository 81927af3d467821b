#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rvm/config.hpp"
#include "rvm/run.hpp"
#include "rvm/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rvm: random vortex Monte-Carlo schemes for 2D viscous flow"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  auto* run_cmd = app.add_subcommand("run", "Run a configuration and write snapshots");
  run_cmd->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run_cmd->add_option("--seed", seed, "Override [run] seed");

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle self-checks");

  std::string info_path;
  auto* info_cmd = app.add_subcommand("lattice-info", "Print lattice node counts for a config");
  info_cmd->add_option("config", info_path, "Config file")->required()->check(CLI::ExistingFile);

  auto* golden_cmd = app.add_subcommand("golden", "Print the wall experiment preset");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      auto config = rvm::load_config(config_path);
      if (seed) config.seed = *seed;
      rvm::RunOptions options;
      options.out_dir = out_dir;
      options.log = &std::cerr;
      const auto report = rvm::run(config, options);
      std::cout << "nodes " << report.node_count << ", steps " << report.steps_done << ", "
                << report.snapshot_files.size() << " snapshot files in " << out_dir << ", "
                << report.wall_clock_s << " s on " << report.workers << " workers\n";
      return 0;
    }
    if (*verify_cmd) {
      return rvm::print_checks(rvm::run_verification(), std::cout) == 0 ? 0 : 1;
    }
    if (*info_cmd) {
      const auto config = rvm::load_config(info_path);
      const auto info = rvm::lattice_info(config);
      std::cout << "scheme " << rvm::scheme_name(config.scheme) << '\n'
                << "nodes " << info.node_count << '\n'
                << "boundary_nodes " << info.boundary_nodes << '\n'
                << "outer_nodes " << info.outer_nodes << '\n';
      if (config.is_wall()) std::cout << "reynolds " << config.reynolds() << '\n';
      for (const auto& w : info.warnings) std::cout << "warning " << w << '\n';
      return 0;
    }
    if (*golden_cmd) {
      std::cout << rvm::golden_preset_text();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
