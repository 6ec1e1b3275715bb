#include "conncraft/series.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "conncraft/error.hpp"
#include "conncraft/isomorphism.hpp"

namespace conncraft {
namespace {

std::vector<VertexId> oriented(const std::vector<VertexId>& path, VertexId from) {
  if (path.front() == from) return path;
  return {path.rbegin(), path.rend()};
}

void contract_in_place(Graph& g, VertexId b, VertexId a, VertexId c) {
  g.remove_vertex(b);
  g.add_edge(a, c);
}

void require_core_input(const Graph& g) {
  if (g.num_vertices() < 2) throw PreconditionError("core needs at least two vertices");
  if (!is_connected(g)) throw PreconditionError("core needs a connected graph");
}

CoreCertificate run_fixpoint(const Graph& g, const std::set<VertexId>& keep) {
  require_core_input(g);
  Graph work = g;
  std::vector<ContractionRecord> log;
  // Eligibility can change after every contraction (a new edge may block a
  // neighbour), so rescan each round.
  while (true) {
    std::optional<VertexId> pick;
    std::optional<VertexId> fallback;
    for (VertexId v : work.vertices()) {
      if (!is_contractible(work, v)) continue;
      if (!keep.contains(v)) {
        pick = v;
        break;
      }
      if (!fallback) fallback = v;
    }
    if (!pick) pick = fallback;
    if (!pick) break;
    const auto& nb = work.neighbors(*pick);
    const VertexId a = *nb.begin();
    const VertexId c = *nb.rbegin();
    log.push_back(ContractionRecord{*pick, a, c});
    contract_in_place(work, *pick, a, c);
  }
  return CoreCertificate(std::move(work), std::move(log));
}

}  // namespace

std::map<Edge, std::vector<VertexId>> CoreCertificate::edge_paths() const {
  Graph host = reconstruct();
  std::map<Edge, std::vector<VertexId>> paths;
  for (const Edge& e : host.edges()) paths[e] = {e.u, e.v};
  for (const ContractionRecord& r : log_) {
    auto left = oriented(paths.at(Edge(r.left, r.removed)), r.left);
    const auto right = oriented(paths.at(Edge(r.removed, r.right)), r.removed);
    paths.erase(Edge(r.left, r.removed));
    paths.erase(Edge(r.removed, r.right));
    left.insert(left.end(), right.begin() + 1, right.end());
    const Edge merged(r.left, r.right);
    paths[merged] = oriented(left, merged.u);
  }
  return paths;
}

std::map<VertexId, Edge> CoreCertificate::carrier_edges() const {
  std::map<VertexId, Edge> out;
  for (const auto& [edge, path] : edge_paths()) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) out[path[i]] = edge;
  }
  return out;
}

Graph CoreCertificate::reconstruct() const {
  Graph g = core_;
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    g.remove_edge(it->left, it->right);
    g.add_edge(it->left, it->removed);
    g.add_edge(it->removed, it->right);
  }
  return g;
}

bool is_contractible(const Graph& g, VertexId b) {
  const auto& nb = g.neighbors(b);
  return nb.size() == 2 && !g.has_edge(*nb.begin(), *nb.rbegin());
}

Graph series_contract(const Graph& g, VertexId b) {
  const auto& nb = g.neighbors(b);
  if (nb.size() != 2) {
    throw PreconditionError("series-contraction needs a degree-2 vertex; " + std::to_string(b) +
                            " has degree " + std::to_string(nb.size()));
  }
  const VertexId a = *nb.begin();
  const VertexId c = *nb.rbegin();
  if (g.has_edge(a, c)) {
    throw PreconditionError("series-contraction at " + std::to_string(b) +
                            " would duplicate edge " + std::to_string(a) + "-" +
                            std::to_string(c));
  }
  Graph out = g;
  contract_in_place(out, b, a, c);
  return out;
}

Graph series_expand(const Graph& g, VertexId a, VertexId c, VertexId fresh) {
  if (!g.has_edge(a, c)) {
    throw PreconditionError("series-expansion needs edge " + std::to_string(a) + "-" +
                            std::to_string(c));
  }
  if (g.has_vertex(fresh)) {
    throw PreconditionError("series-expansion vertex " + std::to_string(fresh) +
                            " already exists");
  }
  Graph out = g;
  out.remove_edge(a, c);
  out.add_edge(a, fresh);
  out.add_edge(fresh, c);
  return out;
}

std::vector<VertexId> contractible_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (is_contractible(g, v)) out.push_back(v);
  }
  return out;
}

CoreCertificate core(const Graph& g) { return run_fixpoint(g, {}); }

CoreCertificate core_preferring(const Graph& g, const std::set<VertexId>& keep) {
  return run_fixpoint(g, keep);
}

bool is_core(const Graph& g) { return contractible_vertices(g).empty(); }

bool sim2_equivalent(const Graph& g, const Graph& h) {
  return are_isomorphic(core(g).core(), core(h).core()).has_value();
}

}  // namespace conncraft
