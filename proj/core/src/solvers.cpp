#include "femtonc/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "femtonc/error.hpp"

namespace femtonc {

namespace {

// Maximum clique by Bron-Kerbosch with Tomita pivoting. A greedy colouring
// of P bounds how much the current clique can still grow.
class MaxClique {
public:
  explicit MaxClique(const std::vector<DynamicBitset>& adj) : adj_(adj), n_(adj.size()) {}

  std::vector<int> run()
  {
    DynamicBitset P(n_), X(n_);
    P.set_all();
    std::vector<int> R;
    expand(R, P, X);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  int color_bound(const DynamicBitset& P) const
  {
    DynamicBitset uncolored = P;
    int colors = 0;
    while (uncolored.any()) {
      ++colors;
      DynamicBitset avail = uncolored;
      for (std::size_t v = avail.first(); v < n_; v = avail.next(v + 1)) {
        uncolored.reset(v);
        avail.subtract(adj_[v]);
      }
    }
    return colors;
  }

  void expand(std::vector<int>& R, DynamicBitset& P, DynamicBitset& X)
  {
    if (P.none()) {
      if (X.none() && R.size() > best_.size()) best_ = R;
      return;
    }
    const std::size_t rs = R.size();
    if (rs + P.count() <= best_.size()) return;
    if (rs + static_cast<std::size_t>(color_bound(P)) <= best_.size()) return;

    // pivot maximising |P ∩ N(u)| over P ∪ X, lowest index on ties
    std::size_t pivot = n_, pivot_hits = 0;
    auto consider = [&](const DynamicBitset& S) {
      for (std::size_t u = S.first(); u < n_; u = S.next(u + 1)) {
        std::size_t h = P.and_count(adj_[u]);
        if (pivot == n_ || h > pivot_hits || (h == pivot_hits && u < pivot)) {
          pivot = u;
          pivot_hits = h;
        }
      }
    };
    consider(P);
    consider(X);

    DynamicBitset branch = P;
    branch.subtract(adj_[pivot]);
    for (std::size_t v = branch.first(); v < n_; v = branch.next(v + 1)) {
      DynamicBitset P2 = P, X2 = X;
      P2 &= adj_[v];
      X2 &= adj_[v];
      R.push_back(static_cast<int>(v));
      expand(R, P2, X2);
      R.pop_back();
      P.reset(v);
      X.set(v);
      if (rs + P.count() <= best_.size()) return;
    }
  }

  const std::vector<DynamicBitset>& adj_;
  std::size_t n_;
  std::vector<int> best_;
};

std::vector<DynamicBitset> complement_rows(const Graph& g)
{
  std::vector<DynamicBitset> rows;
  rows.reserve(g.size());
  for (int v = 0; v < g.size(); ++v) {
    DynamicBitset r = g.row(v);
    r.flip();
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<int> mis_exact(const Graph& g, int cap)
{
  if (g.size() > cap)
    throw SolverLimit("exact MIS on " + std::to_string(g.size()) + " vertices exceeds cap " +
                      std::to_string(cap));
  if (g.size() == 0) return {};
  auto rows = complement_rows(g);
  return MaxClique(rows).run();
}

std::vector<int> gvs(const Graph& g, const GvsOptions& opt)
{
  const int n = g.size();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  std::vector<std::int64_t> s(n), nsum(n);
  std::vector<int> picked;

  while (remaining > 0) {
    const std::int64_t V = remaining;
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v)
      if (alive[v]) {
        s[v] = V - deg[v];
        total += s[v];
      }
    int best = -1;
    std::int64_t best_w = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::int64_t ns = 0;
      for (int u : g.neighbors(v))
        if (alive[u]) ns += s[u];
      nsum[v] = ns;
      std::int64_t w = opt.weight_over_neighbors ? s[v] * ns : s[v] * (total - s[v] - ns);
      if (w > best_w) {
        best_w = w;
        best = v;
      }
    }
    picked.push_back(best);
    std::vector<int> gone{best};
    for (int u : g.neighbors(best))
      if (alive[u]) gone.push_back(u);
    for (int x : gone) alive[x] = 0;
    for (int x : gone)
      for (int u : g.neighbors(x))
        if (alive[u]) --deg[u];
    remaining -= static_cast<int>(gone.size());
  }
  return picked;
}

std::vector<std::vector<int>> Coloring::classes() const
{
  std::vector<std::vector<int>> out(num_colors);
  for (std::size_t v = 0; v < color.size(); ++v) out[color[v]].push_back(static_cast<int>(v));
  return out;
}

bool is_proper(const Graph& g, const Coloring& c)
{
  if (static_cast<int>(c.color.size()) != g.size()) return false;
  std::vector<char> used(c.num_colors, 0);
  for (int v = 0; v < g.size(); ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.num_colors) return false;
    used[c.color[v]] = 1;
    for (int u : g.neighbors(v))
      if (c.color[u] == c.color[v]) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char x) { return x != 0; });
}

Coloring ggc(const Graph& g, const std::vector<int>& order_in)
{
  const int n = g.size();
  std::vector<int> order = order_in;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) throw InvalidInput("order is not a permutation");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw InvalidInput("order is not a permutation");
    seen[v] = 1;
  }

  Coloring c;
  c.color.assign(n, -1);
  std::vector<int> mark(n + 1, -1);
  for (int v : order) {
    for (int u : g.neighbors(v))
      if (c.color[u] >= 0) mark[c.color[u]] = v;
    int k = 0;
    while (mark[k] == v) ++k;
    c.color[v] = k;
    c.num_colors = std::max(c.num_colors, k + 1);
  }
  return c;
}

std::vector<int> greedy_clique(const Graph& g)
{
  std::vector<int> clique;
  DynamicBitset cand(g.size());
  cand.set_all();
  while (cand.any()) {
    int best = -1;
    std::size_t best_d = 0;
    cand.for_each([&](std::size_t v) {
      std::size_t d = cand.and_count(g.row(static_cast<int>(v)));
      if (best < 0 || d > best_d) {
        best = static_cast<int>(v);
        best_d = d;
      }
    });
    clique.push_back(best);
    cand &= g.row(best);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

namespace {

class Dsatur {
public:
  Dsatur(const Graph& g, Coloring upper) : g_(g), n_(g.size()), best_(std::move(upper)) {}

  Coloring solve(const std::vector<int>& clique)
  {
    color_.assign(n_, -1);
    sat_.assign(n_, std::vector<int>(n_ + 1, 0));
    satdeg_.assign(n_, 0);
    used_ = 0;
    for (int v : clique) assign(v, used_++);
    lower_ = used_;
    if (lower_ < best_.num_colors) search(n_ - static_cast<int>(clique.size()));
    return best_;
  }

private:
  void assign(int v, int c)
  {
    color_[v] = c;
    for (int u : g_.neighbors(v))
      if (sat_[u][c]++ == 0) ++satdeg_[u];
  }
  void unassign(int v)
  {
    int c = color_[v];
    color_[v] = -1;
    for (int u : g_.neighbors(v))
      if (--sat_[u][c] == 0) --satdeg_[u];
  }

  int pick() const
  {
    int best = -1, bs = -1, bd = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int d = 0;
      for (int u : g_.neighbors(v))
        if (color_[u] < 0) ++d;
      if (satdeg_[v] > bs || (satdeg_[v] == bs && d > bd)) {
        best = v;
        bs = satdeg_[v];
        bd = d;
      }
    }
    return best;
  }

  void search(int left)
  {
    if (best_.num_colors == lower_) return;
    if (left == 0) {
      best_.color = color_;
      best_.num_colors = used_;
      return;
    }
    int v = pick();
    for (int c = 0; c < used_; ++c) {
      if (sat_[v][c]) continue;
      assign(v, c);
      search(left - 1);
      unassign(v);
      if (best_.num_colors == lower_) return;
    }
    if (used_ + 1 < best_.num_colors) {
      assign(v, used_++);
      search(left - 1);
      unassign(v);
      --used_;
    }
  }

  const Graph& g_;
  int n_;
  Coloring best_;
  std::vector<int> color_;
  std::vector<std::vector<int>> sat_;
  std::vector<int> satdeg_;
  int used_ = 0;
  int lower_ = 0;
};

}  // namespace

Coloring exact_coloring(const Graph& g, int cap)
{
  if (g.size() > cap)
    throw SolverLimit("exact colouring on " + std::to_string(g.size()) + " vertices exceeds cap " +
                      std::to_string(cap));
  if (g.size() == 0) return {};
  Coloring upper = ggc(g);
  // exact clique of g = MIS of its complement, cheap at these sizes
  std::vector<DynamicBitset> rows;
  for (int v = 0; v < g.size(); ++v) rows.push_back(g.row(v));
  std::vector<int> clique = MaxClique(rows).run();
  if (static_cast<int>(clique.size()) == upper.num_colors) return upper;
  return Dsatur(g, std::move(upper)).solve(clique);
}

int chromatic_exact(const Graph& g, int cap) { return exact_coloring(g, cap).num_colors; }

int distinct_wanted(const Scenario& s, const std::vector<ClientId>& clients)
{
  std::vector<char> seen(s.num_files, 0);
  int n = 0;
  for (ClientId j : clients)
    if (!seen[s.clients[j].wants]++) ++n;
  return n;
}

}  // namespace femtonc
