#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "femtonc/bitset.hpp"

namespace femtonc {

// Simple undirected graph on vertices 0..n-1. Keeps both a dense bit row and
// a neighbour list per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return m_; }

  // Ignores self-loops and duplicate edges.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const DynamicBitset& row(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  Graph induced(const std::vector<int>& keep) const;
  Graph complement() const;
  std::vector<std::pair<int, int>> edges() const;

  double density() const;

private:
  std::vector<std::vector<int>> adj_;
  std::vector<DynamicBitset> rows_;
  std::size_t m_ = 0;
};

bool is_independent(const Graph& g, const std::vector<int>& set);
bool is_maximal_independent(const Graph& g, const std::vector<int>& set);

}  // namespace femtonc
