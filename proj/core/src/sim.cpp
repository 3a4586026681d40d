#include "femtonc/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "femtonc/conflict_graphs.hpp"
#include "femtonc/error.hpp"

namespace femtonc {

const char* to_string(SweepVar v)
{
  switch (v) {
  case SweepVar::U: return "U";
  case SweepVar::FcRadius: return "fc_radius";
  case SweepVar::SigmaC: return "sigma_c";
  case SweepVar::SigmaU: return "sigma_u";
  case SweepVar::F: return "F";
  case SweepVar::C: return "C";
  }
  return "?";
}

SweepVar parse_sweep_var(const std::string& s)
{
  for (SweepVar v : {SweepVar::U, SweepVar::FcRadius, SweepVar::SigmaC, SweepVar::SigmaU,
                     SweepVar::F, SweepVar::C})
    if (s == to_string(v)) return v;
  throw InvalidInput("unknown sweep variable '" + s + "'");
}

void apply_sweep_value(ScenarioParams& p, SweepVar v, double value)
{
  switch (v) {
  case SweepVar::U: p.U = static_cast<int>(std::lround(value)); break;
  case SweepVar::FcRadius: p.fc_radius = value; break;
  case SweepVar::SigmaC: p.sigma_c = value; break;
  case SweepVar::SigmaU: p.sigma_u = value; break;
  case SweepVar::F: p.F = static_cast<int>(std::lround(value)); break;
  case SweepVar::C: p.C = static_cast<int>(std::lround(value)); break;
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Runs body(i) for i in [0, n) on up to `threads` workers. The first
// exception thrown by any task is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, int threads, Body&& body)
{
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

struct TrialOutcome {
  int n_fc = 0;
  int n_mbs = 0;
  int baseline = 0;
  int n_fc_onc = 0;
  int n_fc_broadcast = 0;
  int residual = 0;
  int residual_colors = 0;
  std::string error;
};

struct Acc {
  double sum = 0, sumsq = 0;
  int n = 0;
  void add(double x)
  {
    sum += x;
    sumsq += x * x;
    ++n;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double stderr_() const
  {
    if (n < 2) return 0.0;
    double m = mean();
    double var = std::max(0.0, (sumsq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

std::string csv_safe(std::string s)
{
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '"') c = ';';
  return s;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t point, std::size_t trial)
{
  return splitmix64(splitmix64(splitmix64(seed) ^ point) ^ trial);
}

std::vector<MetricRow> run_sweep(const SweepSpec& spec)
{
  if (spec.trials < 1) throw InvalidInput("trials must be >= 1");
  if (spec.policies.empty()) throw InvalidInput("sweep needs at least one policy");
  const std::size_t P = spec.values.size(), K = spec.policies.size(),
                    T = static_cast<std::size_t>(spec.trials);

  std::vector<ScenarioParams> points(P, spec.base);
  for (std::size_t i = 0; i < P; ++i) {
    apply_sweep_value(points[i], spec.var, spec.values[i]);
    validate_params(points[i]);
  }

  std::vector<TrialOutcome> out(P * T * K);
  parallel_for(P * T, spec.threads, [&](std::size_t task) {
    const std::size_t pi = task / T, t = task % T;
    ScenarioParams prm = points[pi];
    prm.seed = trial_seed(spec.seed, pi, t);
    Scenario sc = generate_scenario(prm);
    for (std::size_t k = 0; k < K; ++k) {
      TrialOutcome& o = out[task * K + k];
      const SchedulerPolicy& pol = spec.policies[k];
      try {
        ScheduleResult r = run_policy(sc, pol);
        if (spec.check_schedules) {
          std::string bad = check_schedule(sc, r);
          if (!bad.empty())
            throw Error("invalid schedule from " + pol.name() + " (seed " +
                        std::to_string(prm.seed) + "): " + bad);
        }
        o.n_fc = r.n_fc;
        o.n_mbs = r.n_mbs;
        o.baseline = baseline_no_fc(sc, pol);
        o.n_fc_onc = r.n_fc_onc;
        o.n_fc_broadcast = r.n_fc_broadcast;
        o.residual = r.residual_size;
        o.residual_colors = r.residual_colors;
      } catch (const SolverLimit& e) {
        o.error = "solver_limit: " + std::string(e.what());
      }
    }
  });

  std::vector<MetricRow> rows;
  for (std::size_t pi = 0; pi < P; ++pi)
    for (std::size_t k = 0; k < K; ++k) {
      MetricRow row;
      row.sweep_var = to_string(spec.var);
      row.value = spec.values[pi];
      row.policy = spec.policies[k].name();
      row.trials = spec.trials;
      Acc nfc, nmbs, base, ratio, onc, bc, res, col;
      for (std::size_t t = 0; t < T; ++t) {
        const TrialOutcome& o = out[(pi * T + t) * K + k];
        if (!o.error.empty()) {
          row.flag = csv_safe("trial " + std::to_string(t) + " " + o.error);
          break;
        }
        nfc.add(o.n_fc);
        nmbs.add(o.n_mbs);
        base.add(o.baseline);
        ratio.add(o.baseline > 0 ? 100.0 * (o.baseline - o.n_mbs) / o.baseline : 0.0);
        onc.add(o.n_fc_onc);
        bc.add(o.n_fc_broadcast);
        res.add(o.residual);
        col.add(o.residual_colors);
      }
      if (row.flag.empty()) {
        row.mean_n_fc = nfc.mean();
        row.mean_n_mbs = nmbs.mean();
        row.mean_baseline = base.mean();
        row.og_ratio_of_means =
            base.mean() > 0 ? 100.0 * (base.mean() - nmbs.mean()) / base.mean() : 0.0;
        row.og_mean_of_ratios = ratio.mean();
        row.stderr_n_mbs = nmbs.stderr_();
        row.mean_n_fc_onc = onc.mean();
        row.stderr_n_fc_onc = onc.stderr_();
        row.mean_n_fc_broadcast = bc.mean();
        row.stderr_n_fc_broadcast = bc.stderr_();
        row.mean_residual = res.mean();
        row.mean_residual_colors = col.mean();
      } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.mean_n_fc = row.mean_n_mbs = row.mean_baseline = nan;
        row.og_ratio_of_means = row.og_mean_of_ratios = row.stderr_n_mbs = nan;
        row.mean_n_fc_onc = row.stderr_n_fc_onc = nan;
        row.mean_n_fc_broadcast = row.stderr_n_fc_broadcast = nan;
        row.mean_residual = row.mean_residual_colors = nan;
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

namespace {

std::string fmt(double v)
{
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string metric_csv_line(const MetricRow& r)
{
  std::string s = r.sweep_var + ',' + fmt(r.value) + ',' + r.policy + ',' +
                  std::to_string(r.trials) + ',' + fmt(r.mean_n_fc) + ',' + fmt(r.mean_n_mbs) +
                  ',' + fmt(r.mean_baseline) + ',' + fmt(r.og_ratio_of_means) + ',' +
                  fmt(r.og_mean_of_ratios) + ',' + fmt(r.stderr_n_mbs) + ',' + csv_safe(r.flag);
  return s;
}

void write_metric_csv(std::ostream& out, const std::vector<MetricRow>& rows)
{
  out << kMetricHeader << "\n";
  for (const MetricRow& r : rows) out << metric_csv_line(r) << "\n";
}

DensityEstimate empirical_edge_density(const ScenarioParams& p, GraphKind kind, int trials,
                                       int threads)
{
  if (trials < 100) throw InvalidInput("edge density needs at least 100 trials");
  validate_params(p);
  std::vector<double> dens(trials, -1.0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    ScenarioParams q = p;
    q.seed = trial_seed(p.seed, 0, t);
    Scenario s = generate_scenario(q);
    Graph g = kind == GraphKind::Mbs ? build_conflict_graph(s).graph
                                            : build_dual_conflict_graph(s).graph;
    if (g.size() >= 2) dens[t] = g.density();
  });
  Acc acc;
  for (double d : dens)
    if (d >= 0) acc.add(d);
  if (acc.n == 0) throw InsufficientData("no trial produced a graph with two or more vertices");
  return {acc.mean(), acc.stderr_(), acc.n};
}

namespace {

std::vector<double> ranks(const std::vector<double>& v)
{
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = (i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b)
{
  if (a.size() != b.size() || a.size() < 2) throw InvalidInput("spearman needs paired samples");
  auto ra = ranks(a), rb = ranks(b);
  const double n = static_cast<double>(a.size());
  double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0 || sbb == 0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace femtonc
