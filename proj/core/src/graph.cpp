#include "conncraft/graph.hpp"

#include <algorithm>
#include <string>

#include "conncraft/error.hpp"

namespace conncraft {

Graph::Graph(std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  Graph g;
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

void Graph::add_edge(VertexId a, VertexId b) {
  if (a == b) {
    throw PreconditionError("loop at vertex " + std::to_string(a));
  }
  auto& na = adj_[a];
  if (na.contains(b)) {
    throw PreconditionError("parallel edge " + std::to_string(a) + "-" +
                            std::to_string(b));
  }
  na.insert(b);
  adj_[b].insert(a);
  ++edge_count_;
}

void Graph::remove_edge(VertexId a, VertexId b) {
  if (!has_edge(a, b)) {
    throw PreconditionError("no edge " + std::to_string(a) + "-" +
                            std::to_string(b));
  }
  adj_[a].erase(b);
  adj_[b].erase(a);
  --edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  for (VertexId w : it->second) adj_[w].erase(v);
  edge_count_ -= it->second.size();
  adj_.erase(it);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.contains(b);
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adj_) {
    for (VertexId w : nbrs) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

VertexId Graph::next_id() const {
  return adj_.empty() ? 0 : adj_.rbegin()->first + 1;
}

bool Graph::is_complete() const {
  const std::size_t n = adj_.size();
  return edge_count_ == n * (n - 1) / 2;
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  const auto verts = g.vertices();
  std::set<VertexId> seen{verts.front()};
  std::vector<VertexId> stack{verts.front()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == g.num_vertices();
}

Graph without_vertices(const Graph& g, const std::set<VertexId>& removed) {
  Graph out;
  for (VertexId v : g.vertices()) {
    if (!removed.contains(v)) out.add_vertex(v);
  }
  for (const Edge& e : g.edges()) {
    if (!removed.contains(e.u) && !removed.contains(e.v)) out.add_edge(e.u, e.v);
  }
  return out;
}

bool is_cycle(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  const auto verts = g.vertices();
  return std::all_of(verts.begin(), verts.end(),
                     [&](VertexId v) { return g.degree(v) == 2; });
}

bool is_subgraph(const Graph& sub, const Graph& g) {
  for (VertexId v : sub.vertices()) {
    if (!g.has_vertex(v)) return false;
  }
  for (const Edge& e : sub.edges()) {
    if (!g.has_edge(e)) return false;
  }
  return true;
}

}  // namespace conncraft
