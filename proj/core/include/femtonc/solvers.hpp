#pragma once

#include <vector>

#include "femtonc/conflict_graphs.hpp"
#include "femtonc/graph.hpp"
#include "femtonc/model.hpp"

namespace femtonc {

inline constexpr int kDefaultMisCap = 40;
inline constexpr int kDefaultChromaticCap = 20;

// Maximum independent set, as a maximum clique of the complement found by
// Bron-Kerbosch with pivoting and a colouring bound. Sorted vertex indices.
std::vector<int> mis_exact(const Graph& g, int cap = kDefaultMisCap);

struct GvsOptions {
  bool weight_over_neighbors = false;
};

// Greedy weighted vertex search. Returns picked vertices in pick order.
std::vector<int> gvs(const Graph& g, const GvsOptions& opt = {});

struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  // vertex lists per colour, each ascending
  std::vector<std::vector<int>> classes() const;
};

bool is_proper(const Graph& g, const Coloring& c);

// First-fit colouring in the given order (natural order when empty).
Coloring ggc(const Graph& g, const std::vector<int>& order = {});

// Optimal colouring by DSATUR branch and bound.
Coloring exact_coloring(const Graph& g, int cap = kDefaultChromaticCap);
int chromatic_exact(const Graph& g, int cap = kDefaultChromaticCap);

// Greedy clique (used as the lower bound by exact_coloring).
std::vector<int> greedy_clique(const Graph& g);

struct OffloadOptions {
  int max_clients = 12;
  int max_fcs = 3;
  int chromatic_cap = kDefaultChromaticCap;
};

struct OffloadSolution {
  std::vector<std::vector<ClientId>> fc_sets;  // per FC, disjoint
  // Each MBS transmission lists the clients it serves. When mbs_uncoded is
  // set the residue goes out as one plain transmission per wanted file.
  std::vector<std::vector<ClientId>> mbs_classes;
  bool mbs_uncoded = false;
  int n_mbs = 0;
};

// Exhaustive minimisation of MBS transmissions over every family of
// disjoint per-FC independent sets.
OffloadSolution optimal_offload(const Scenario& s, const OffloadOptions& opt = {});

// Number of distinct files wanted by the given clients.
int distinct_wanted(const Scenario& s, const std::vector<ClientId>& clients);

}  // namespace femtonc
