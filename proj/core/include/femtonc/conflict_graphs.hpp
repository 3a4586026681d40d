#pragma once

#include <string>
#include <vector>

#include "femtonc/graph.hpp"
#include "femtonc/model.hpp"

namespace femtonc {

struct Request {
  ClientId client = 0;
  FileId file = 0;
  bool operator==(const Request&) const = default;
};

// Two requests cannot share one XOR transmission.
bool coding_conflict(const Request& a, const FileSet& has_a, const Request& b, const FileSet& has_b);

struct ConflictGraph {
  std::vector<Request> requests;  // sorted by client
  Graph graph;

  int size() const { return graph.size(); }
  // vertex index of a client, or -1
  int vertex_of(ClientId j) const;
};

struct DualVertex {
  FcId fc = 0;
  ClientId client = 0;
  FileId file = 0;
  bool operator==(const DualVertex&) const = default;
};

struct DualConflictGraph {
  std::vector<DualVertex> vertices;  // sorted by (fc, client, file)
  Graph graph;

  int size() const { return graph.size(); }
};

// has_sets is indexed by client id. Duplicate clients raise InvalidInput.
ConflictGraph build_conflict_graph(const std::vector<Request>& requests,
                                   const std::vector<FileSet>& has_sets);

// MBS conflict graph over the given clients (all clients when omitted).
ConflictGraph build_conflict_graph(const Scenario& s);
ConflictGraph build_conflict_graph(const Scenario& s, const std::vector<ClientId>& clients);

// Per-FC graph of servable requests: cached wanted file, client covered.
ConflictGraph build_fc_conflict_graph(const Scenario& s, FcId fc);

// Vertices (i,j,k) for every FC i caching the file k wanted by covered client
// j. Coding edges join vertices of the same FC whose requests conflict;
// service edges join copies of one client at different FCs.
DualConflictGraph build_dual_conflict_graph(const Scenario& s);

ConflictGraph residual_graph(const ConflictGraph& g, const std::vector<ClientId>& served);

std::string to_dot(const ConflictGraph& g);
std::string to_dot(const DualConflictGraph& g);

}  // namespace femtonc
