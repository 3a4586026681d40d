// Acceptance runner: one PASS/FAIL line per criterion.
//
//   femtonc_acceptance [--criterion N]... [--known-unattainable 5,7,10]
//                      [--configs DIR] [--threads N]
//
// Exit status is nonzero when a criterion fails that is not in the
// known-unattainable list.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "femtonc/femtonc.hpp"
#include "oracles.hpp"

using namespace femtonc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep = "; ")
{
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string config_dir = FEMTONC_CONFIG_DIR;
int threads = 1;

cli::Config load(const std::string& name)
{
  cli::Config c = cli::load_config(config_dir + "/" + name + ".cfg");
  c.threads = threads;
  return c;
}

const MetricRow& row(const std::vector<MetricRow>& rows, double value, const std::string& policy)
{
  for (const auto& r : rows)
    if (r.value == value && r.policy == policy) return r;
  throw std::runtime_error("missing sweep row " + policy);
}

// Sweeps shared between criteria.
std::map<std::string, std::vector<MetricRow>> cache;

const std::vector<MetricRow>& sweep(const std::string& name)
{
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_sweep(load(name).sweep_spec())).first;
  return it->second;
}

std::string schedule(const std::string& extra)
{
  std::ostringstream out, err;
  cli::RunOptions o;
  o.timestamp = false;
  o.command = "schedule";
  cli::Config c = cli::parse_config("fixture=motivating_example\n" + extra);
  int code = cli::cmd_schedule(c, o, out, err);
  if (code != cli::kOk) return "exit " + std::to_string(code) + ": " + err.str();
  return out.str();
}

Outcome criterion1()
{
  std::string exact = schedule("policies=exact-exact\n");
  std::string forced = schedule("policies=exact-exact\nfc_transmissions=0:0,5;1:1\n");
  std::string optimal = schedule("policies=optimal\n");
  bool a = exact.find("\nn_mbs=1\n") != std::string::npos;
  bool b = forced.find("\nn_mbs=2\n") != std::string::npos;
  bool c = optimal.find("\nn_mbs=1\n") != std::string::npos;
  return {a && b && c, std::string("scheme n_mbs=") + (a ? "1" : "?") +
                           ", forced fc2=f2 n_mbs=" + (b ? "2" : "?") +
                           ", optimal n_mbs=" + (c ? "1" : "?")};
}

Outcome criterion2()
{
  std::mt19937_64 rng(2024);
  int mis_bad = 0, chi_bad = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    Graph g = oracle::random_graph(n, p, rng);
    auto s = mis_exact(g);
    if (!is_independent(g, s) || static_cast<int>(s.size()) != oracle::mis_size(g)) ++mis_bad;
  }
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 9);
    double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    Graph g = oracle::random_graph(n, p, rng);
    Coloring c = exact_coloring(g);
    if (!is_proper(g, c) || c.num_colors != oracle::chromatic_number(g)) ++chi_bad;
  }
  return {mis_bad == 0 && chi_bad == 0, "mis mismatches " + std::to_string(mis_bad) +
                                            "/200, chromatic mismatches " +
                                            std::to_string(chi_bad) + "/200"};
}

Outcome criterion3()
{
  SchedulerPolicy scheme = parse_policy("exact-exact");
  SchedulerPolicy best = parse_policy("optimal");
  std::mt19937_64 rng(33);
  double sum_scheme = 0, sum_opt = 0;
  int below = 0, invalid = 0;
  for (int t = 0; t < 500; ++t) {
    ScenarioParams p;
    p.F = 8;
    p.C = 2;
    p.U = 1 + static_cast<int>(rng() % 10);
    p.sigma_u = (rng() % 2) ? 0.125 : 0.25;
    p.sigma_c = (rng() % 2) ? 0.5 : 0.75;
    p.fc_radius = std::uniform_real_distribution<double>(30, 120)(rng);
    p.mbs_radius = 60;
    p.seed = rng();
    Scenario s = generate_scenario(p);
    ScheduleResult a = onc_broadcast_schedule(s, scheme);
    ScheduleResult o = optimal_schedule(s, best);
    if (!check_schedule(s, a).empty() || !check_schedule(s, o).empty()) ++invalid;
    if (a.n_mbs < o.n_mbs) ++below;
    sum_scheme += a.n_mbs;
    sum_opt += o.n_mbs;
  }
  double gap = sum_opt > 0 ? (sum_scheme - sum_opt) / sum_opt : 0.0;
  return {gap <= 0.15 && below == 0 && invalid == 0,
          "mean scheme " + fmt("%.3f", sum_scheme / 500) + " vs optimal " +
              fmt("%.3f", sum_opt / 500) + " (gap " + fmt("%.1f%%", 100 * gap) +
              "), instances below optimal " + std::to_string(below) + ", invalid " +
              std::to_string(invalid)};
}

Outcome criterion4()
{
  const auto& rows = sweep("small_full_coverage");
  bool ok = true;
  std::vector<std::string> parts;
  double top = 0;
  for (double U : load("small_full_coverage").sweep_values) top = std::max(top, U);
  for (double U : load("small_full_coverage").sweep_values) {
    const MetricRow& g = row(rows, U, "gvs-ggc");
    const MetricRow& e = row(rows, U, "exact-exact");
    double rel = (g.mean_n_mbs - e.mean_n_mbs) / e.mean_n_mbs;
    ok = ok && std::abs(rel) <= 0.10;
    std::string part = "U=" + fmt("%g", U) + " gap " + fmt("%.1f%%", 100 * rel);
    if (U >= top - 5) {
      ok = ok && e.og_ratio_of_means >= 15.0;
      part += " og " + fmt("%.1f%%", e.og_ratio_of_means);
    }
    parts.push_back(part);
  }
  return {ok, join(parts)};
}

Outcome criterion5()
{
  const auto& lim = sweep("small_limited_coverage");
  const auto& full = sweep("small_full_coverage");
  bool ok = true;
  std::vector<std::string> parts;
  for (double U : load("small_limited_coverage").sweep_values) {
    const MetricRow& l = row(lim, U, "exact-exact");
    const MetricRow& f = row(full, U, "exact-exact");
    ok = ok && l.og_ratio_of_means >= 11.0 && l.og_ratio_of_means < f.og_ratio_of_means;
    parts.push_back("U=" + fmt("%g", U) + " og " + fmt("%.1f%%", l.og_ratio_of_means) +
                    " (full " + fmt("%.1f%%", f.og_ratio_of_means) + ")");
  }
  return {ok, join(parts)};
}

Outcome criterion6()
{
  bool ok = true;
  std::vector<std::string> parts;
  for (auto [name, need] : {std::pair<std::string, double>{"large_network_u50", 8.0},
                            std::pair<std::string, double>{"large_network_u150", 35.0}}) {
    cli::Config c = load(name);
    const auto& rows = sweep(name);
    std::vector<double> radii = c.sweep_values;
    std::sort(radii.begin(), radii.end());
    const double mid = radii[radii.size() / 2];
    for (double r : radii) {
      if (r < mid) continue;
      const MetricRow& d = row(rows, r, "gvs-ggc:dual-graph-only");
      const MetricRow& s = row(rows, r, "gvs-ggc:separate-graph");
      ok = ok && d.og_ratio_of_means >= s.og_ratio_of_means;
    }
    const MetricRow& d = row(rows, radii.back(), "gvs-ggc:dual-graph-only");
    const MetricRow& s = row(rows, radii.back(), "gvs-ggc:separate-graph");
    ok = ok && d.og_ratio_of_means >= need;
    parts.push_back("U=" + std::to_string(c.params.U) + " r=" + fmt("%g", radii.back()) +
                    " dual og " + fmt("%.1f%%", d.og_ratio_of_means) + " separate " +
                    fmt("%.1f%%", s.og_ratio_of_means) + " (need " + fmt("%g%%", need) + ")");
  }
  return {ok, join(parts)};
}

Outcome criterion7()
{
  bool ok = true;
  std::vector<std::string> parts;
  for (auto [U, F, su] : {std::tuple{50, 50, 0.2}, std::tuple{100, 50, 0.2},
                          std::tuple{50, 10, 0.5}}) {
    ScenarioParams p;
    p.U = U;
    p.F = F;
    p.sigma_u = su;
    p.seed = 7;
    DensityEstimate d = empirical_edge_density(p, GraphKind::Mbs, 2000, threads);
    double lemma = pi_mbs(U, F, su);
    ok = ok && std::abs(d.mean - lemma) <= 0.03;
    parts.push_back("(" + std::to_string(U) + "," + std::to_string(F) + "," + fmt("%g", su) +
                    ") " + fmt("%.4f", d.mean) + " vs " + fmt("%.4f", lemma));
  }
  return {ok, join(parts)};
}

Outcome criterion8()
{
  bool ok = true;
  std::vector<std::string> parts;
  for (auto [F, C, Hc] : {std::tuple{10, 4, 5}, std::tuple{12, 3, 8}}) {
    ScenarioParams p;
    p.F = F;
    p.C = C;
    p.U = 20;
    p.sigma_c = static_cast<double>(Hc) / F;
    p.sigma_u = 0.1;
    p.fc_radius = 1000;
    p.mbs_radius = 60;
    p.seed = 8;
    DensityEstimate d = empirical_edge_density(p, GraphKind::Dual, 2000, threads);
    TheoryParams t;
    t.F = F;
    t.C = C;
    t.U = p.U;
    t.sigma_c = p.sigma_c;
    t.sigma_u = p.sigma_u;
    double pred = pi_dual_full_coverage(t);
    ok = ok && std::abs(d.mean - pred) <= 0.05;
    parts.push_back("(F=" + std::to_string(F) + ",C=" + std::to_string(C) +
                    ",Hc=" + std::to_string(Hc) + ") " + fmt("%.4f", d.mean) + " vs " +
                    fmt("%.4f", pred));
  }
  return {ok, join(parts)};
}

Outcome criterion9()
{
  const auto& rows = sweep("small_full_coverage");
  bool ok = true;
  int checked = 0;
  double worst = -1e9;
  for (const auto& r : rows) {
    double slack = r.mean_n_fc_broadcast - (r.mean_n_fc_onc + 2 * r.stderr_n_fc_onc);
    worst = std::max(worst, slack);
    ok = ok && slack <= 0;
    ++checked;
  }
  return {ok, std::to_string(checked) + " rows, max broadcast - (onc + 2se) = " +
                  fmt("%.3f", worst)};
}

Outcome criterion10()
{
  bool mono = true;
  std::string first_drop;
  for (int F : {10, 50, 100})
    for (double su : {0.0, 0.2, 0.5}) {
      double prev = chi_approx(2, pi_mbs(2, F, su), 0.0);
      for (int nu = 3; nu <= 10000; ++nu) {
        double cur = chi_approx(nu, pi_mbs(nu, F, su), 0.0);
        if (!(cur > prev)) {
          if (mono)
            first_drop = "F=" + std::to_string(F) + " su=" + fmt("%g", su) + " nu " +
                         std::to_string(nu - 1) + "->" + std::to_string(nu) + ": " +
                         fmt("%.3f", prev) + "->" + fmt("%.3f", cur);
          mono = false;
        }
        prev = cur;
      }
    }
  const auto& rows = sweep("bounds_envelope");
  std::vector<double> residual, colors;
  for (const auto& r : rows) {
    residual.push_back(r.mean_residual);
    colors.push_back(r.mean_residual_colors);
  }
  double rho = spearman(residual, colors);
  return {mono && rho > 0.95,
          std::string("strictly increasing: ") + (mono ? "yes" : "no, first drop " + first_drop) +
              "; spearman " + fmt("%.4f", rho)};
}

Outcome criterion11()
{
  cli::Config c = load("bounds_envelope");
  const auto& rows = sweep("bounds_envelope");
  const double target = c.params.F - c.params.C;
  bool ok = true;
  int above = 0;
  const MetricRow* last = nullptr;
  for (const auto& r : rows) {
    if (r.mean_residual >= 3) {
      Bounds b = gvs_ggc_bounds(r.mean_residual, c.params.F, c.params.C, c.params.sigma_u);
      if (r.mean_n_mbs > b.upper) ++above;
    }
    if (!last || r.value > last->value) last = &r;
  }
  ok = above == 0;
  Bounds b = gvs_ggc_bounds(last->mean_residual, c.params.F, c.params.C, c.params.sigma_u);
  auto close = [&](double v) { return std::abs(v - target) <= 0.05 * target; };
  ok = ok && close(last->mean_n_mbs) && close(b.lower) && close(b.upper);
  return {ok, "points above upper bound " + std::to_string(above) + "; at U=" +
                  fmt("%g", last->value) + " sim " + fmt("%.2f", last->mean_n_mbs) +
                  " lower " + fmt("%.2f", b.lower) + " upper " + fmt("%.2f", b.upper) +
                  " target " + fmt("%g", target)};
}

struct Criterion {
  int id;
  double budget_s;
  std::function<Outcome()> run;
};

std::set<int> parse_ids(const std::string& s)
{
  std::set<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) ids.insert(std::stoi(tok));
  return ids;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"femtonc acceptance criteria"};
  std::vector<int> only;
  std::string known_arg;
  threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--criterion", only, "run only these criteria");
  app.add_option("--known-unattainable", known_arg, "comma-separated criteria expected to fail");
  app.add_option("--configs", config_dir, "directory holding the sweep configs");
  app.add_option("--threads", threads, "worker threads for sweeps");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> known = parse_ids(known_arg);

  const std::vector<Criterion> all = {
      {1, 1, criterion1},       {2, 90, criterion2},     {3, 600, criterion3},
      {4, 900, criterion4},     {5, 900, criterion5},    {6, 3600, criterion6},
      {7, 300, criterion7},     {8, 600, criterion8},    {9, 900, criterion9},
      {10, 1200, criterion10},  {11, 1200, criterion11},
  };

  int unexpected = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // shared sweeps are charged to the first criterion that needs them
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << o.detail << " ["
              << fmt("%.1f", secs) << " s]";
    if (!o.pass && known.count(c.id)) std::cout << " (known unattainable)";
    std::cout << std::endl;
    if (!o.pass && !known.count(c.id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
