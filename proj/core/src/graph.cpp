#include "femtonc/graph.hpp"

#include <algorithm>

namespace femtonc {

Graph::Graph(int n) : adj_(n), rows_(n, DynamicBitset(n)) {}

void Graph::add_edge(int u, int v)
{
  if (u == v || rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

Graph Graph::induced(const std::vector<int>& keep) const
{
  const int k = static_cast<int>(keep.size());
  std::vector<int> pos(size(), -1);
  for (int i = 0; i < k; ++i) pos[keep[i]] = i;
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int w : adj_[keep[i]])
      if (pos[w] > i) h.add_edge(i, pos[w]);
  for (auto& a : h.adj_) std::sort(a.begin(), a.end());
  return h;
}

Graph Graph::complement() const
{
  Graph h(size());
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

double Graph::density() const
{
  const double n = size();
  return n < 2 ? 0.0 : static_cast<double>(m_) / (n * (n - 1) / 2.0);
}

bool is_independent(const Graph& g, const std::vector<int>& set)
{
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b] || g.adjacent(set[a], set[b])) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const std::vector<int>& set)
{
  if (!is_independent(g, set)) return false;
  DynamicBitset blocked(g.size());
  for (int v : set) {
    blocked.set(v);
    blocked |= g.row(v);
  }
  return blocked.count() == static_cast<std::size_t>(g.size());
}

}  // namespace femtonc
