#include "femtonc/model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "femtonc/error.hpp"

namespace femtonc {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

FileSet::FileSet(int num_files, const std::vector<FileId>& files) : FileSet(num_files)
{
  for (FileId f : files) {
    if (f < 0 || f >= num_files)
      throw InvalidInput("file index " + std::to_string(f) + " outside library of " +
                         std::to_string(num_files));
    insert(f);
  }
}

std::vector<FileId> FileSet::to_vector() const
{
  std::vector<FileId> out;
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<FileId>(i)); });
  return out;
}

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5 + 1e-9)); }

void validate_scenario(const Scenario& s)
{
  if (s.num_files < 1) throw InvalidInput("library needs at least one file");
  for (int j = 0; j < s.num_clients(); ++j) {
    const Client& c = s.clients[j];
    if (c.id != j) throw InvalidInput("client ids must be dense and ordered");
    if (c.wants < 0 || c.wants >= s.num_files)
      throw InvalidInput("client " + std::to_string(j) + " wants a file outside the library");
    if (c.has.library_size() != s.num_files)
      throw InvalidInput("client " + std::to_string(j) + " has set sized for another library");
    if (c.has.contains(c.wants))
      throw InvalidInput("client " + std::to_string(j) + " already has its wanted file");
    if (distance(c.position, {}) > s.mbs_radius * (1 + 1e-12))
      throw InvalidInput("client " + std::to_string(j) + " outside the macrocell");
  }
  for (int i = 0; i < s.num_fcs(); ++i) {
    const Femtocache& fc = s.fcs[i];
    if (fc.id != i) throw InvalidInput("fc ids must be dense and ordered");
    if (fc.radius < 0) throw InvalidInput("fc " + std::to_string(i) + " has negative radius");
    if (fc.cache.library_size() != s.num_files)
      throw InvalidInput("fc " + std::to_string(i) + " cache sized for another library");
  }
}

std::vector<ClientId> coverage_set(const Femtocache& fc, const Scenario& s)
{
  std::vector<ClientId> out;
  for (const Client& c : s.clients)
    if (distance(c.position, fc.position) <= fc.radius) out.push_back(c.id);
  return out;
}

std::vector<std::vector<bool>> coverage_matrix(const Scenario& s)
{
  std::vector<std::vector<bool>> cov(s.fcs.size(), std::vector<bool>(s.clients.size(), false));
  for (const Femtocache& fc : s.fcs)
    for (const Client& c : s.clients)
      cov[fc.id][c.id] = distance(c.position, fc.position) <= fc.radius;
  return cov;
}

PlacementPlan systematic_placement(int F, int C, int Hc)
{
  if (F < 1 || C < 0) throw InvalidConfiguration("need F >= 1 and C >= 0");
  if (Hc < 0 || Hc > F)
    throw InvalidConfiguration("cache size " + std::to_string(Hc) + " outside [0, F]");
  PlacementPlan plan;
  plan.caches.resize(C);
  int next = 0;
  for (int i = 0; i < C; ++i) {
    for (int k = 0; k < Hc; ++k) {
      plan.caches[i].push_back(next);
      next = (next + 1) % F;
    }
  }
  plan.repetition_index = static_cast<double>(Hc) * C / F;
  plan.B = plan.repetition_index > 0 ? C / plan.repetition_index : 0.0;
  return plan;
}

void validate_params(const ScenarioParams& p)
{
  if (p.F < 1) throw InvalidConfiguration("F must be >= 1");
  if (p.C < 0) throw InvalidConfiguration("C must be >= 0");
  if (p.U < 0) throw InvalidConfiguration("U must be >= 0");
  if (p.sigma_u < 0 || p.sigma_c < 0 || p.sigma_c > 1)
    throw InvalidConfiguration("side-information ratios must lie in [0, 1]");
  if (p.Hu() >= p.F)
    throw InvalidConfiguration("H_u = " + std::to_string(p.Hu()) +
                               " leaves no file to request (F = " + std::to_string(p.F) + ")");
  if (p.Hc() > p.F) throw InvalidConfiguration("H_c exceeds F");
  if (p.fc_radius < 0 || p.mbs_radius <= 0) throw InvalidConfiguration("radii must be positive");
  if (p.fc_layout == FcLayout::Fixed && static_cast<int>(p.fc_positions.size()) != p.C)
    throw InvalidConfiguration("fixed layout needs exactly C fc positions");
}

namespace {

Point disk_point(std::mt19937_64& rng, double radius)
{
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = radius * std::sqrt(unit(rng));
  double t = 2.0 * std::numbers::pi * unit(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

Scenario generate_scenario(const ScenarioParams& p)
{
  validate_params(p);
  std::mt19937_64 rng(p.seed);

  Scenario s;
  s.num_files = p.F;
  s.mbs_radius = p.mbs_radius;
  s.seed = p.seed;

  PlacementPlan plan = systematic_placement(p.F, p.C, p.Hc());
  for (int i = 0; i < p.C; ++i) {
    Femtocache fc;
    fc.id = i;
    fc.position = p.fc_layout == FcLayout::Fixed ? p.fc_positions[i] : disk_point(rng, p.mbs_radius);
    fc.radius = p.fc_radius;
    fc.cache = FileSet(p.F, plan.caches[i]);
    s.fcs.push_back(std::move(fc));
  }

  const int Hu = p.Hu();
  std::uniform_int_distribution<int> pick_file(0, p.F - 1);
  std::vector<FileId> pool;
  for (int j = 0; j < p.U; ++j) {
    Client c;
    c.id = j;
    c.position = disk_point(rng, p.mbs_radius);
    c.wants = pick_file(rng);
    pool.clear();
    for (FileId f = 0; f < p.F; ++f)
      if (f != c.wants) pool.push_back(f);
    // partial Fisher-Yates: the first Hu entries become the Has set
    for (int t = 0; t < Hu; ++t) {
      std::uniform_int_distribution<int> d(t, static_cast<int>(pool.size()) - 1);
      std::swap(pool[t], pool[d(rng)]);
    }
    c.has = FileSet(p.F, std::vector<FileId>(pool.begin(), pool.begin() + Hu));
    s.clients.push_back(std::move(c));
  }
  return s;
}

}  // namespace femtonc
