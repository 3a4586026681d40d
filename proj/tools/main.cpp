#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv)
{
  using namespace femtonc::cli;

  CLI::App app{"femtonc: network-coded macrocell offloading simulator"};
  app.require_subcommand(1, 1);
  std::string config_path, out_path;
  std::uint64_t seed = 0;
  int threads = 0;
  bool no_timestamp = false;
  app.add_option("--config", config_path, "key=value config file");
  auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
  auto* out_opt = app.add_option("--out", out_path, "output file (default stdout)");
  auto* thr_opt = app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", no_timestamp, "omit the generated= header line");
  for (const char* name : {"schedule", "sweep", "theory", "validate", "fixtures"})
    app.add_subcommand(name)->fallthrough();
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  Config cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  if (*seed_opt) cfg.params.seed = seed;
  if (*thr_opt) cfg.threads = threads;
  if (*out_opt) cfg.out = out_path;

  RunOptions opts;
  opts.timestamp = !no_timestamp;
  opts.command = app.get_subcommands().front()->get_name();

  if (cfg.out.empty()) return dispatch(opts.command, cfg, opts, std::cout, std::cerr);

  std::ostringstream buf;
  int rc = dispatch(opts.command, cfg, opts, buf, std::cerr);
  std::ofstream f(cfg.out);
  if (!f) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return kConfigError;
  }
  f << buf.str();
  return rc;
}
