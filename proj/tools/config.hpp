#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "femtonc/model.hpp"
#include "femtonc/scheduler.hpp"
#include "femtonc/sim.hpp"

namespace femtonc::cli {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  ScenarioParams params;
  int trials = 1000;
  SweepVar sweep_var = SweepVar::U;
  std::vector<double> sweep_values{5, 10, 15, 20, 25};
  std::vector<std::string> policies{"gvs-ggc", "exact-exact"};
  int exact_mis_cap = kDefaultMisCap;
  int exact_chromatic_cap = kDefaultChromaticCap;
  int optimal_max_clients = 12;
  int optimal_max_fcs = 3;
  bool gvs_weight_over_neighbors = false;
  double o1 = 1.0;
  double o2 = 0.0;
  std::string scenario;  // path to a scenario file
  std::string fixture;   // bundled fixture name
  std::map<FcId, std::vector<FileId>> fc_transmissions;
  bool theory_columns = false;
  int validate_trials = 500;
  double density_tolerance = 0.03;
  double dual_density_tolerance = 0.05;
  int threads = 1;
  std::string out;

  std::vector<SchedulerPolicy> scheduler_policies() const;
  SweepSpec sweep_spec() const;
};

// key=value lines, '#' comments. Unknown keys and bad values raise
// ConfigError naming the line.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// Applies one key=value pair (used by the parser and by tests).
void set_key(Config& c, const std::string& key, const std::string& value);

// Every key with its resolved value, in a fixed order.
std::vector<std::pair<std::string, std::string>> resolved(const Config& c);

}  // namespace femtonc::cli
