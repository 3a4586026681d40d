#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "femtonc/model.hpp"
#include "femtonc/scheduler.hpp"

namespace femtonc {

enum class SweepVar { U, FcRadius, SigmaC, SigmaU, F, C };

const char* to_string(SweepVar v);
SweepVar parse_sweep_var(const std::string& s);

void apply_sweep_value(ScenarioParams& p, SweepVar v, double value);

struct SweepSpec {
  ScenarioParams base;
  SweepVar var = SweepVar::U;
  std::vector<double> values;
  int trials = 1000;
  std::vector<SchedulerPolicy> policies;
  std::uint64_t seed = 1;
  int threads = 1;
  bool check_schedules = true;
};

std::uint64_t trial_seed(std::uint64_t seed, std::size_t point, std::size_t trial);

struct MetricRow {
  std::string sweep_var;
  double value = 0.0;
  std::string policy;
  int trials = 0;
  double mean_n_fc = 0.0;
  double mean_n_mbs = 0.0;
  double mean_baseline = 0.0;
  double og_ratio_of_means = 0.0;
  double og_mean_of_ratios = 0.0;
  double stderr_n_mbs = 0.0;
  std::string flag;  // empty when the row is valid

  double mean_n_fc_onc = 0.0;
  double stderr_n_fc_onc = 0.0;
  double mean_n_fc_broadcast = 0.0;
  double stderr_n_fc_broadcast = 0.0;
  double mean_residual = 0.0;
  double mean_residual_colors = 0.0;
};

std::vector<MetricRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kMetricHeader =
    "sweep_var,value,policy,trials,mean_n_fc,mean_n_mbs,mean_baseline,"
    "og_ratio_of_means,og_mean_of_ratios,stderr_n_mbs,flag";

void write_metric_csv(std::ostream& out, const std::vector<MetricRow>& rows);
std::string metric_csv_line(const MetricRow& r);

enum class GraphKind { Mbs, Dual };

struct DensityEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  int used_trials = 0;
};

// Mean edge density over trials with at least two vertices.
DensityEstimate empirical_edge_density(const ScenarioParams& p, GraphKind kind, int trials,
                                       int threads = 1);

double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace femtonc
