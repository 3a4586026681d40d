#include "femtonc/conflict_graphs.hpp"

#include <algorithm>
#include <sstream>

#include "femtonc/error.hpp"

namespace femtonc {

bool coding_conflict(const Request& a, const FileSet& has_a, const Request& b, const FileSet& has_b)
{
  return a.file != b.file && (!has_b.contains(a.file) || !has_a.contains(b.file));
}

int ConflictGraph::vertex_of(ClientId j) const
{
  auto it = std::lower_bound(requests.begin(), requests.end(), j,
                             [](const Request& r, ClientId c) { return r.client < c; });
  return it != requests.end() && it->client == j ? static_cast<int>(it - requests.begin()) : -1;
}

ConflictGraph build_conflict_graph(const std::vector<Request>& requests,
                                   const std::vector<FileSet>& has_sets)
{
  ConflictGraph g;
  g.requests = requests;
  std::sort(g.requests.begin(), g.requests.end(),
            [](const Request& a, const Request& b) { return a.client < b.client; });
  for (std::size_t i = 1; i < g.requests.size(); ++i)
    if (g.requests[i].client == g.requests[i - 1].client)
      throw InvalidInput("client " + std::to_string(g.requests[i].client) + " requested twice");
  for (const Request& r : g.requests)
    if (r.client < 0 || r.client >= static_cast<int>(has_sets.size()))
      throw InvalidInput("client " + std::to_string(r.client) + " has no has set");

  const int n = static_cast<int>(g.requests.size());
  g.graph = Graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Request& a = g.requests[u];
      const Request& b = g.requests[v];
      if (coding_conflict(a, has_sets[a.client], b, has_sets[b.client])) g.graph.add_edge(u, v);
    }
  return g;
}

namespace {

std::vector<FileSet> has_sets_of(const Scenario& s)
{
  std::vector<FileSet> has;
  has.reserve(s.clients.size());
  for (const Client& c : s.clients) has.push_back(c.has);
  return has;
}

}  // namespace

ConflictGraph build_conflict_graph(const Scenario& s, const std::vector<ClientId>& clients)
{
  std::vector<Request> req;
  req.reserve(clients.size());
  for (ClientId j : clients) req.push_back({j, s.clients.at(j).wants});
  return build_conflict_graph(req, has_sets_of(s));
}

ConflictGraph build_conflict_graph(const Scenario& s)
{
  std::vector<ClientId> all(s.clients.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<ClientId>(j);
  return build_conflict_graph(s, all);
}

ConflictGraph build_fc_conflict_graph(const Scenario& s, FcId fc)
{
  const Femtocache& c = s.fcs.at(fc);
  std::vector<ClientId> servable;
  for (ClientId j : coverage_set(c, s))
    if (c.cache.contains(s.clients[j].wants)) servable.push_back(j);
  return build_conflict_graph(s, servable);
}

DualConflictGraph build_dual_conflict_graph(const Scenario& s)
{
  DualConflictGraph g;
  auto cov = coverage_matrix(s);
  for (const Femtocache& fc : s.fcs)
    for (const Client& c : s.clients)
      if (cov[fc.id][c.id] && fc.cache.contains(c.wants))
        g.vertices.push_back({fc.id, c.id, c.wants});

  const int n = static_cast<int>(g.vertices.size());
  g.graph = Graph(n);
  std::vector<std::vector<int>> copies(s.clients.size());
  for (int u = 0; u < n; ++u) {
    const DualVertex& a = g.vertices[u];
    copies[a.client].push_back(u);
    // vertices are grouped by FC, so the coding scan stops at the block end
    for (int v = u + 1; v < n && g.vertices[v].fc == a.fc; ++v) {
      const DualVertex& b = g.vertices[v];
      if (coding_conflict({a.client, a.file}, s.clients[a.client].has, {b.client, b.file},
                          s.clients[b.client].has))
        g.graph.add_edge(u, v);
    }
  }
  for (const auto& cp : copies)
    for (std::size_t x = 0; x < cp.size(); ++x)
      for (std::size_t y = x + 1; y < cp.size(); ++y) g.graph.add_edge(cp[x], cp[y]);
  return g;
}

ConflictGraph residual_graph(const ConflictGraph& g, const std::vector<ClientId>& served)
{
  std::vector<ClientId> sorted = served;
  std::sort(sorted.begin(), sorted.end());
  ConflictGraph r;
  std::vector<int> keep;
  for (int v = 0; v < g.size(); ++v)
    if (!std::binary_search(sorted.begin(), sorted.end(), g.requests[v].client)) {
      keep.push_back(v);
      r.requests.push_back(g.requests[v]);
    }
  r.graph = g.graph.induced(keep);
  return r;
}

std::string to_dot(const ConflictGraph& g)
{
  std::ostringstream out;
  out << "graph mbs {\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  v" << v << " [label=\"" << g.requests[v].client << ':' << g.requests[v].file
        << "\"];\n";
  for (auto [u, v] : g.graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DualConflictGraph& g)
{
  std::ostringstream out;
  out << "graph dual {\n";
  for (int v = 0; v < g.size(); ++v) {
    const DualVertex& d = g.vertices[v];
    out << "  v" << v << " [label=\"" << d.fc << ':' << d.client << ':' << d.file << "\"];\n";
  }
  for (auto [u, v] : g.graph.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace femtonc
