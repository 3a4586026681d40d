#include "femtonc/scheduler.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "femtonc/conflict_graphs.hpp"
#include "femtonc/error.hpp"

namespace femtonc {

const char* to_string(FcMode m)
{
  switch (m) {
  case FcMode::OncBroadcast: return "onc-broadcast";
  case FcMode::DualGraphOnly: return "dual-graph-only";
  case FcMode::SeparateGraph: return "separate-graph";
  case FcMode::BroadcastOnly: return "broadcast-only";
  }
  return "?";
}

std::string SchedulerPolicy::name() const
{
  if (optimal) return "optimal";
  std::string n = fc_solver == FcSolver::Exact ? "exact" : "gvs";
  n += mbs_coloring == MbsColoring::Exact ? "-exact" : "-ggc";
  if (fc_mode != FcMode::OncBroadcast) n += std::string(":") + to_string(fc_mode);
  return n;
}

SchedulerPolicy parse_policy(const std::string& name)
{
  SchedulerPolicy p;
  if (name == "optimal") {
    p.optimal = true;
    p.fc_solver = FcSolver::Exact;
    p.mbs_coloring = MbsColoring::Exact;
    return p;
  }
  std::string head = name, mode;
  if (auto c = name.find(':'); c != std::string::npos) {
    head = name.substr(0, c);
    mode = name.substr(c + 1);
  }
  auto dash = head.find('-');
  if (dash == std::string::npos) throw InvalidInput("bad policy '" + name + "'");
  std::string fc = head.substr(0, dash), mbs = head.substr(dash + 1);
  if (fc == "exact") p.fc_solver = FcSolver::Exact;
  else if (fc == "gvs") p.fc_solver = FcSolver::Gvs;
  else throw InvalidInput("bad FC solver in policy '" + name + "'");
  if (mbs == "exact") p.mbs_coloring = MbsColoring::Exact;
  else if (mbs == "ggc") p.mbs_coloring = MbsColoring::Ggc;
  else throw InvalidInput("bad MBS colouring in policy '" + name + "'");
  if (mode.empty() || mode == "onc-broadcast") p.fc_mode = FcMode::OncBroadcast;
  else if (mode == "dual-graph-only") p.fc_mode = FcMode::DualGraphOnly;
  else if (mode == "separate-graph") p.fc_mode = FcMode::SeparateGraph;
  else if (mode == "broadcast-only") p.fc_mode = FcMode::BroadcastOnly;
  else throw InvalidInput("bad FC mode in policy '" + name + "'");
  return p;
}

namespace {

std::vector<FileId> files_of(const Scenario& s, const std::vector<ClientId>& clients)
{
  std::vector<FileId> f;
  for (ClientId j : clients) f.push_back(s.clients[j].wants);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

std::vector<ClientId> residual_of(const Scenario& s, const std::vector<ClientId>& served)
{
  std::vector<char> done(s.clients.size(), 0);
  for (ClientId j : served) done[j] = 1;
  std::vector<ClientId> r;
  for (int j = 0; j < s.num_clients(); ++j)
    if (!done[j]) r.push_back(j);
  return r;
}

std::vector<int> solve_mis(const Graph& g, const SchedulerPolicy& p)
{
  if (p.fc_solver == FcSolver::Exact) return mis_exact(g, p.mis_cap);
  return gvs(g, p.gvs);
}

Coloring color_graph(const Graph& g, const SchedulerPolicy& p)
{
  if (p.mbs_coloring == MbsColoring::Exact) return exact_coloring(g, p.chromatic_cap);
  return ggc(g);
}

FcPlan plan_from_sets(const Scenario& s, std::vector<std::vector<ClientId>> sets)
{
  FcPlan plan;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& set = sets[i];
    if (set.empty()) continue;
    std::sort(set.begin(), set.end());
    plan.transmissions.push_back({static_cast<FcId>(i), files_of(s, set), set});
    plan.served.insert(plan.served.end(), set.begin(), set.end());
  }
  std::sort(plan.served.begin(), plan.served.end());
  return plan;
}

// Colouring-based and uncoded MBS plans for one residual.
struct MbsOptions {
  std::vector<Transmission> colored;
  std::vector<Transmission> uncoded;
  int colors = 0;
};

MbsOptions mbs_options(const Scenario& s, const std::vector<ClientId>& residual,
                       const SchedulerPolicy& p)
{
  MbsOptions o;
  if (residual.empty()) return o;
  ConflictGraph g = build_conflict_graph(s, residual);
  Coloring col = color_graph(g.graph, p);
  o.colors = col.num_colors;
  for (const auto& cls : col.classes()) {
    std::vector<ClientId> members;
    for (int v : cls) members.push_back(g.requests[v].client);
    o.colored.push_back({-1, files_of(s, members), members});
  }
  std::vector<std::vector<ClientId>> by_file(s.num_files);
  for (ClientId j : residual) by_file[s.clients[j].wants].push_back(j);
  for (FileId f = 0; f < s.num_files; ++f)
    if (!by_file[f].empty()) o.uncoded.push_back({-1, {f}, by_file[f]});
  return o;
}

}  // namespace

std::vector<Transmission> mbs_plan(const Scenario& s, const std::vector<ClientId>& residual,
                                   const SchedulerPolicy& p)
{
  MbsOptions o = mbs_options(s, residual, p);
  return o.colored.size() <= o.uncoded.size() ? o.colored : o.uncoded;
}

FcPlan fc_broadcast_plan(const Scenario& s)
{
  auto cov = coverage_matrix(s);
  std::vector<char> claimed(s.clients.size(), 0);
  std::vector<std::vector<ClientId>> sets(s.fcs.size());
  std::vector<int> count(s.num_files);
  for (const Femtocache& fc : s.fcs) {
    std::fill(count.begin(), count.end(), 0);
    for (const Client& c : s.clients)
      if (cov[fc.id][c.id] && !claimed[c.id] && fc.cache.contains(c.wants)) ++count[c.wants];
    FileId best = -1;
    for (FileId f = 0; f < s.num_files; ++f)
      if (count[f] > 0 && (best < 0 || count[f] > count[best])) best = f;
    if (best < 0) continue;
    for (const Client& c : s.clients)
      if (cov[fc.id][c.id] && !claimed[c.id] && c.wants == best) {
        claimed[c.id] = 1;
        sets[fc.id].push_back(c.id);
      }
  }
  return plan_from_sets(s, std::move(sets));
}

FcPlan fc_onc_plan(const Scenario& s, const SchedulerPolicy& p)
{
  DualConflictGraph g = build_dual_conflict_graph(s);
  std::vector<std::vector<ClientId>> sets(s.fcs.size());
  for (int v : solve_mis(g.graph, p)) sets[g.vertices[v].fc].push_back(g.vertices[v].client);
  return plan_from_sets(s, std::move(sets));
}

FcPlan fc_separate_plan(const Scenario& s, const SchedulerPolicy& p)
{
  FcPlan plan;
  std::vector<char> claimed(s.clients.size(), 0);
  for (const Femtocache& fc : s.fcs) {
    ConflictGraph g = build_fc_conflict_graph(s, fc.id);
    std::vector<ClientId> chosen;
    for (int v : solve_mis(g.graph, p)) chosen.push_back(g.requests[v].client);
    if (chosen.empty()) continue;
    std::sort(chosen.begin(), chosen.end());
    Transmission t{fc.id, files_of(s, chosen), {}};
    for (ClientId j : chosen)
      if (!claimed[j]) {
        claimed[j] = 1;
        t.served.push_back(j);
      }
    plan.served.insert(plan.served.end(), t.served.begin(), t.served.end());
    plan.transmissions.push_back(std::move(t));
  }
  std::sort(plan.served.begin(), plan.served.end());
  return plan;
}

namespace {

struct Candidate {
  int scheme;
  const FcPlan* fc;
  const std::vector<Transmission>* mbs;
};

ScheduleResult assemble(const Scenario& s, const SchedulerPolicy& p, const FcPlan* broadcast,
                        const FcPlan* onc)
{
  ScheduleResult r;
  MbsOptions mb, mo;
  std::vector<Candidate> cands;
  if (broadcast) {
    mb = mbs_options(s, residual_of(s, broadcast->served), p);
    cands.push_back({1, broadcast, &mb.uncoded});
    cands.push_back({2, broadcast, &mb.colored});
    r.n_fc_broadcast = static_cast<int>(broadcast->served.size());
  }
  if (onc) {
    mo = mbs_options(s, residual_of(s, onc->served), p);
    cands.push_back({3, onc, &mo.uncoded});
    cands.push_back({4, onc, &mo.colored});
    r.n_fc_onc = static_cast<int>(onc->served.size());
  }
  const Candidate* best = &cands.front();
  for (const Candidate& c : cands)
    if (c.mbs->size() < best->mbs->size()) best = &c;

  r.chosen_scheme = best->scheme;
  r.fc_transmissions = best->fc->transmissions;
  r.mbs_transmissions = *best->mbs;
  r.n_fc = static_cast<int>(best->fc->served.size());
  r.n_mbs = static_cast<int>(best->mbs->size());
  const FcPlan* diag = onc ? onc : broadcast;
  r.residual_size = s.num_clients() - static_cast<int>(diag->served.size());
  r.residual_colors = onc ? mo.colors : mb.colors;
  return r;
}

}  // namespace

ScheduleResult onc_broadcast_schedule(const Scenario& s, const SchedulerPolicy& p)
{
  FcPlan b, o;
  bool use_b = p.fc_mode == FcMode::OncBroadcast || p.fc_mode == FcMode::BroadcastOnly;
  bool use_o = p.fc_mode != FcMode::BroadcastOnly;
  if (use_b) b = fc_broadcast_plan(s);
  if (use_o) o = p.fc_mode == FcMode::SeparateGraph ? fc_separate_plan(s, p) : fc_onc_plan(s, p);
  ScheduleResult r = assemble(s, p, use_b ? &b : nullptr, use_o ? &o : nullptr);
  if (!use_b) r.n_fc_broadcast = 0;
  return r;
}

ScheduleResult separate_graph_schedule(const Scenario& s, const SchedulerPolicy& p)
{
  SchedulerPolicy q = p;
  q.fc_mode = FcMode::SeparateGraph;
  return onc_broadcast_schedule(s, q);
}

ScheduleResult optimal_schedule(const Scenario& s, const SchedulerPolicy& p)
{
  OffloadOptions opt;
  opt.max_clients = p.optimal_max_clients;
  opt.max_fcs = p.optimal_max_fcs;
  opt.chromatic_cap = p.chromatic_cap;
  OffloadSolution sol = optimal_offload(s, opt);

  FcPlan plan = plan_from_sets(s, sol.fc_sets);
  ScheduleResult r;
  r.chosen_scheme = 0;
  r.fc_transmissions = plan.transmissions;
  r.n_fc = static_cast<int>(plan.served.size());
  for (const auto& cls : sol.mbs_classes)
    r.mbs_transmissions.push_back({-1, files_of(s, cls), cls});
  r.n_mbs = sol.n_mbs;
  r.n_fc_onc = r.n_fc;
  r.residual_size = s.num_clients() - r.n_fc;
  r.residual_colors = r.n_mbs;
  return r;
}

ScheduleResult run_policy(const Scenario& s, const SchedulerPolicy& p)
{
  if (p.optimal) return optimal_schedule(s, p);
  return onc_broadcast_schedule(s, p);
}

ScheduleResult schedule_with_fc_transmissions(const Scenario& s,
                                              const std::map<FcId, std::vector<FileId>>& forced,
                                              const SchedulerPolicy& p)
{
  auto cov = coverage_matrix(s);
  std::vector<char> claimed(s.clients.size(), 0);
  FcPlan plan;
  for (const auto& [i, files_in] : forced) {
    if (i < 0 || i >= s.num_fcs()) throw InvalidInput("forced transmission for unknown fc");
    std::vector<FileId> files = files_in;
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    for (FileId f : files)
      if (!s.fcs[i].cache.contains(f))
        throw InvalidInput("fc " + std::to_string(i) + " does not cache file " + std::to_string(f));
    Transmission t{i, files, {}};
    for (const Client& c : s.clients) {
      if (!cov[i][c.id] || claimed[c.id]) continue;
      if (!std::binary_search(files.begin(), files.end(), c.wants)) continue;
      bool ok = std::all_of(files.begin(), files.end(),
                            [&](FileId f) { return f == c.wants || c.has.contains(f); });
      if (ok) {
        claimed[c.id] = 1;
        t.served.push_back(c.id);
      }
    }
    plan.served.insert(plan.served.end(), t.served.begin(), t.served.end());
    plan.transmissions.push_back(std::move(t));
  }
  std::sort(plan.served.begin(), plan.served.end());

  ScheduleResult r;
  r.chosen_scheme = 0;
  r.fc_transmissions = plan.transmissions;
  r.n_fc = static_cast<int>(plan.served.size());
  auto residual = residual_of(s, plan.served);
  r.mbs_transmissions = mbs_plan(s, residual, p);
  r.n_mbs = static_cast<int>(r.mbs_transmissions.size());
  r.residual_size = static_cast<int>(residual.size());
  r.residual_colors = r.n_mbs;
  return r;
}

int baseline_no_fc(const Scenario& s, const SchedulerPolicy& p)
{
  std::vector<ClientId> all(s.clients.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<ClientId>(j);
  if (all.empty()) return 0;
  ConflictGraph g = build_conflict_graph(s, all);
  SchedulerPolicy q = p;
  if (q.optimal) q.mbs_coloring = MbsColoring::Exact;
  return std::min(color_graph(g.graph, q).num_colors, distinct_wanted(s, all));
}

std::string check_schedule(const Scenario& s, const ScheduleResult& r)
{
  auto cov = coverage_matrix(s);
  std::vector<int> times(s.clients.size(), 0);
  int fc_served = 0;
  auto check = [&](const Transmission& t) -> std::string {
    if (t.fc >= s.num_fcs()) return "transmission from unknown fc";
    for (FileId f : t.files) {
      if (f < 0 || f >= s.num_files) return "transmission carries a file outside the library";
      if (t.fc >= 0 && !s.fcs[t.fc].cache.contains(f))
        return "fc " + std::to_string(t.fc) + " sends uncached file " + std::to_string(f);
    }
    for (ClientId j : t.served) {
      if (j < 0 || j >= s.num_clients()) return "unknown client served";
      const Client& c = s.clients[j];
      ++times[j];
      if (t.fc >= 0 && !cov[t.fc][j])
        return "client " + std::to_string(j) + " outside fc " + std::to_string(t.fc);
      if (std::find(t.files.begin(), t.files.end(), c.wants) == t.files.end())
        return "client " + std::to_string(j) + " served a transmission without its file";
      for (FileId f : t.files)
        if (f != c.wants && !c.has.contains(f))
          return "client " + std::to_string(j) + " cannot cancel file " + std::to_string(f);
    }
    return {};
  };
  for (const Transmission& t : r.fc_transmissions) {
    if (t.fc < 0) return "fc transmission without an fc";
    fc_served += static_cast<int>(t.served.size());
    if (auto e = check(t); !e.empty()) return e;
  }
  for (const Transmission& t : r.mbs_transmissions) {
    if (t.fc != -1) return "mbs transmission tagged with an fc";
    if (auto e = check(t); !e.empty()) return e;
  }
  for (int j = 0; j < s.num_clients(); ++j)
    if (times[j] != 1)
      return "client " + std::to_string(j) + " served " + std::to_string(times[j]) + " times";
  if (fc_served != r.n_fc) return "n_fc does not match the fc transmissions";
  if (static_cast<int>(r.mbs_transmissions.size()) != r.n_mbs)
    return "n_mbs does not match the mbs transmissions";
  return {};
}

namespace {

std::string labels(char prefix, const std::vector<int>& ids)
{
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += prefix;
    out += std::to_string(ids[i] + 1);
  }
  return out;
}

void report_line(std::ostringstream& out, const Transmission& t)
{
  if (t.fc >= 0) out << "fc " << t.fc + 1 << ' ';
  else out << "mbs ";
  out << (t.files.size() > 1 ? "xor " : "send ") << labels('f', t.files);
  out << " serves " << (t.served.empty() ? std::string("none") : labels('u', t.served)) << "\n";
}

}  // namespace

std::string format_report(const ScheduleResult& r)
{
  std::ostringstream out;
  for (const Transmission& t : r.fc_transmissions) report_line(out, t);
  for (const Transmission& t : r.mbs_transmissions) report_line(out, t);
  out << "n_fc=" << r.n_fc << "\n";
  out << "n_mbs=" << r.n_mbs << "\n";
  out << "chosen_scheme=" << r.chosen_scheme << "\n";
  return out.str();
}

}  // namespace femtonc
