#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "femtonc/error.hpp"
#include "femtonc/solvers.hpp"

namespace femtonc {

namespace {

using Mask = std::uint32_t;

std::vector<ClientId> mask_clients(Mask m)
{
  std::vector<ClientId> out;
  for (int j = 0; m; ++j, m >>= 1)
    if (m & 1u) out.push_back(j);
  return out;
}

struct Search {
  Search(const Scenario& sc, const OffloadOptions& o) : s(sc), opt(o) {}

  const Scenario& s;
  const OffloadOptions& opt;
  int U = 0;
  int C = 0;
  std::vector<Mask> conflict;  // per client
  std::vector<Mask> feasible;  // per FC
  std::unordered_map<Mask, int> memo;

  std::vector<Mask> chosen;
  std::vector<Mask> best_sets;
  int best = -1;

  int residual_cost(Mask residual)
  {
    auto it = memo.find(residual);
    if (it != memo.end()) return it->second;
    auto clients = mask_clients(residual);
    int cost = 0;
    if (!clients.empty()) {
      ConflictGraph g = build_conflict_graph(s, clients);
      cost = std::min(chromatic_exact(g.graph, opt.chromatic_cap), distinct_wanted(s, clients));
    }
    memo.emplace(residual, cost);
    return cost;
  }

  bool independent(Mask m) const
  {
    for (Mask r = m; r; r &= r - 1) {
      int j = __builtin_ctz(r);
      if (conflict[j] & m) return false;
    }
    return true;
  }

  // Independent subsets of cand that no candidate can extend, ascending.
  std::vector<Mask> maximal_sets(Mask cand) const
  {
    std::vector<Mask> subs;
    for (Mask sub = cand;; sub = (sub - 1) & cand) {
      subs.push_back(sub);
      if (sub == 0) break;
    }
    std::reverse(subs.begin(), subs.end());
    std::vector<Mask> out;
    for (Mask sub : subs) {
      if (!independent(sub)) continue;
      bool maximal = true;
      for (Mask r = cand & ~sub; r; r &= r - 1) {
        int j = __builtin_ctz(r);
        if (!(conflict[j] & sub)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(sub);
    }
    return out;
  }

  void dfs(int i, Mask taken)
  {
    if (best == 0) return;
    if (i == C) {
      const Mask all = U == 32 ? ~Mask{0} : ((Mask{1} << U) - 1);
      int cost = residual_cost(all & ~taken);
      if (best < 0 || cost < best) {
        best = cost;
        best_sets = chosen;
      }
      return;
    }
    for (Mask sub : maximal_sets(feasible[i] & ~taken)) {
      chosen[i] = sub;
      dfs(i + 1, taken | sub);
      if (best == 0) return;
    }
    chosen[i] = 0;
  }
};

}  // namespace

OffloadSolution optimal_offload(const Scenario& s, const OffloadOptions& opt)
{
  const int U = s.num_clients();
  const int C = s.num_fcs();
  if (U > opt.max_clients || C > opt.max_fcs || U > 31)
    throw SolverLimit("optimal offload limited to " + std::to_string(opt.max_clients) +
                      " clients and " + std::to_string(opt.max_fcs) + " FCs (got " +
                      std::to_string(U) + ", " + std::to_string(C) + ")");

  Search st(s, opt);
  st.U = U;
  st.C = C;
  st.conflict.assign(U, 0);
  for (int a = 0; a < U; ++a)
    for (int b = 0; b < U; ++b)
      if (a != b && coding_conflict({a, s.clients[a].wants}, s.clients[a].has,
                                    {b, s.clients[b].wants}, s.clients[b].has))
        st.conflict[a] |= Mask{1} << b;
  auto cov = coverage_matrix(s);
  st.feasible.assign(C, 0);
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < U; ++j)
      if (cov[i][j] && s.fcs[i].cache.contains(s.clients[j].wants)) st.feasible[i] |= Mask{1} << j;
  st.chosen.assign(C, 0);
  st.dfs(0, 0);

  OffloadSolution sol;
  Mask taken = 0;
  for (int i = 0; i < C; ++i) {
    sol.fc_sets.push_back(mask_clients(st.best_sets[i]));
    taken |= st.best_sets[i];
  }
  std::vector<ClientId> residual;
  for (int j = 0; j < U; ++j)
    if (!(taken >> j & 1u)) residual.push_back(j);
  sol.n_mbs = st.best;
  if (!residual.empty()) {
    ConflictGraph g = build_conflict_graph(s, residual);
    Coloring col = exact_coloring(g.graph, opt.chromatic_cap);
    if (col.num_colors <= distinct_wanted(s, residual)) {
      for (const auto& cls : col.classes()) {
        std::vector<ClientId> members;
        for (int v : cls) members.push_back(g.requests[v].client);
        sol.mbs_classes.push_back(members);
      }
    } else {
      sol.mbs_uncoded = true;
      std::vector<std::vector<ClientId>> by_file(s.num_files);
      for (ClientId j : residual) by_file[s.clients[j].wants].push_back(j);
      for (auto& v : by_file)
        if (!v.empty()) sol.mbs_classes.push_back(v);
    }
  }
  return sol;
}

}  // namespace femtonc
