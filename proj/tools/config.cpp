#include "config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "femtonc/error.hpp"

namespace femtonc::cli {

namespace {

std::string trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T number(const std::string& key, const std::string& v)
{
  T x{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("bad value for " + key + ": '" + v + "'");
  return x;
}

bool boolean(const std::string& key, const std::string& v)
{
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + v + "'");
}

std::string fmt(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F f, const char* sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += f(v[i]);
  }
  return out;
}

}  // namespace

void set_key(Config& c, const std::string& key, const std::string& v)
{
  ScenarioParams& p = c.params;
  if (key == "F") p.F = number<int>(key, v);
  else if (key == "C") p.C = number<int>(key, v);
  else if (key == "U") p.U = number<int>(key, v);
  else if (key == "sigma_u") p.sigma_u = number<double>(key, v);
  else if (key == "sigma_c") p.sigma_c = number<double>(key, v);
  else if (key == "fc_radius") p.fc_radius = number<double>(key, v);
  else if (key == "mbs_radius") p.mbs_radius = number<double>(key, v);
  else if (key == "fc_layout") {
    if (v == "uniform-random") p.fc_layout = FcLayout::UniformRandom;
    else if (v == "fixed") p.fc_layout = FcLayout::Fixed;
    else throw ConfigError("fc_layout must be uniform-random or fixed");
  } else if (key == "fc_positions") {
    p.fc_positions.clear();
    for (const auto& pt : split(v, ';')) {
      auto xy = split(pt, ':');
      if (xy.size() != 2) throw ConfigError("fc_positions entries look like x:y");
      p.fc_positions.push_back({number<double>(key, xy[0]), number<double>(key, xy[1])});
    }
  } else if (key == "seed") p.seed = number<std::uint64_t>(key, v);
  else if (key == "trials") c.trials = number<int>(key, v);
  else if (key == "sweep_var") {
    try {
      c.sweep_var = parse_sweep_var(v);
    } catch (const InvalidInput& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "sweep_values") {
    c.sweep_values.clear();
    for (const auto& x : split(v, ',')) c.sweep_values.push_back(number<double>(key, x));
  } else if (key == "policies") {
    c.policies = split(v, ',');
    for (const auto& name : c.policies) try {
        parse_policy(name);
      } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
      }
  } else if (key == "exact_mis_cap") c.exact_mis_cap = number<int>(key, v);
  else if (key == "exact_chromatic_cap") c.exact_chromatic_cap = number<int>(key, v);
  else if (key == "optimal_max_clients") c.optimal_max_clients = number<int>(key, v);
  else if (key == "optimal_max_fcs") c.optimal_max_fcs = number<int>(key, v);
  else if (key == "gvs_weight_over_neighbors") c.gvs_weight_over_neighbors = boolean(key, v);
  else if (key == "o1") c.o1 = number<double>(key, v);
  else if (key == "o2") c.o2 = number<double>(key, v);
  else if (key == "scenario") c.scenario = v;
  else if (key == "fixture") c.fixture = v;
  else if (key == "fc_transmissions") {
    // fc:file,file;fc:file  (zero-based, like scenario files)
    c.fc_transmissions.clear();
    for (const auto& item : split(v, ';')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw ConfigError("fc_transmissions entries look like fc:f1,f2");
      FcId fc = number<int>(key, trim(item.substr(0, colon)));
      std::vector<FileId> files;
      for (const auto& f : split(item.substr(colon + 1), ',')) files.push_back(number<int>(key, f));
      c.fc_transmissions[fc] = files;
    }
  } else if (key == "theory_columns") c.theory_columns = boolean(key, v);
  else if (key == "validate_trials") c.validate_trials = number<int>(key, v);
  else if (key == "density_tolerance") c.density_tolerance = number<double>(key, v);
  else if (key == "dual_density_tolerance") c.dual_density_tolerance = number<double>(key, v);
  else if (key == "threads") c.threads = number<int>(key, v);
  else if (key == "out") c.out = v;
  else throw ConfigError("unknown key '" + key + "'");
}

Config parse_config(const std::string& text)
{
  Config c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    raw = trim(raw);
    if (raw.empty()) continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line) + ": expected key=value");
    try {
      set_key(c, trim(raw.substr(0, eq)), trim(raw.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return c;
}

Config load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<SchedulerPolicy> Config::scheduler_policies() const
{
  std::vector<SchedulerPolicy> out;
  for (const auto& name : policies) {
    SchedulerPolicy p = parse_policy(name);
    p.mis_cap = exact_mis_cap;
    p.chromatic_cap = exact_chromatic_cap;
    p.optimal_max_clients = optimal_max_clients;
    p.optimal_max_fcs = optimal_max_fcs;
    p.gvs.weight_over_neighbors = gvs_weight_over_neighbors;
    out.push_back(p);
  }
  return out;
}

SweepSpec Config::sweep_spec() const
{
  SweepSpec s;
  s.base = params;
  s.var = sweep_var;
  s.values = sweep_values;
  s.trials = trials;
  s.policies = scheduler_policies();
  s.seed = params.seed;
  s.threads = threads;
  return s;
}

std::vector<std::pair<std::string, std::string>> resolved(const Config& c)
{
  const ScenarioParams& p = c.params;
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  std::string tx;
  for (const auto& [fc, files] : c.fc_transmissions) {
    if (!tx.empty()) tx += ';';
    tx += std::to_string(fc) + ':' + join(files, [](int f) { return std::to_string(f); });
  }
  return {
      {"F", std::to_string(p.F)},
      {"C", std::to_string(p.C)},
      {"U", std::to_string(p.U)},
      {"sigma_u", fmt(p.sigma_u)},
      {"sigma_c", fmt(p.sigma_c)},
      {"fc_radius", fmt(p.fc_radius)},
      {"mbs_radius", fmt(p.mbs_radius)},
      {"fc_layout", p.fc_layout == FcLayout::Fixed ? "fixed" : "uniform-random"},
      {"fc_positions", join(p.fc_positions, [](Point q) { return fmt(q.x) + ":" + fmt(q.y); }, ";")},
      {"seed", std::to_string(p.seed)},
      {"trials", std::to_string(c.trials)},
      {"sweep_var", to_string(c.sweep_var)},
      {"sweep_values", join(c.sweep_values, fmt)},
      {"policies", join(c.policies, [](const std::string& s) { return s; })},
      {"exact_mis_cap", std::to_string(c.exact_mis_cap)},
      {"exact_chromatic_cap", std::to_string(c.exact_chromatic_cap)},
      {"optimal_max_clients", std::to_string(c.optimal_max_clients)},
      {"optimal_max_fcs", std::to_string(c.optimal_max_fcs)},
      {"gvs_weight_over_neighbors", b(c.gvs_weight_over_neighbors)},
      {"o1", fmt(c.o1)},
      {"o2", fmt(c.o2)},
      {"scenario", c.scenario},
      {"fixture", c.fixture},
      {"fc_transmissions", tx},
      {"theory_columns", b(c.theory_columns)},
      {"validate_trials", std::to_string(c.validate_trials)},
      {"density_tolerance", fmt(c.density_tolerance)},
      {"dual_density_tolerance", fmt(c.dual_density_tolerance)},
      {"threads", std::to_string(c.threads)},
      {"out", c.out},
  };
}

}  // namespace femtonc::cli
