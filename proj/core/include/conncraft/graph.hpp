#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace conncraft {

/// Opaque, stable vertex identifier. Operations never renumber existing
/// vertices; new vertices always receive ids above the current maximum.
using VertexId = std::uint32_t;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph: no loops, no parallel edges.
///
/// Vertices are kept in id order and adjacency sets are sorted, so every
/// traversal over a Graph is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(std::initializer_list<std::pair<VertexId, VertexId>> edges);

  static Graph from_edges(const std::vector<Edge>& edges);

  /// Adds `v` if absent; no-op otherwise.
  void add_vertex(VertexId v);
  /// Adds edge ab, creating missing endpoints. Throws on a loop or on an
  /// edge that already exists.
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  /// Removes `v` together with its incident edges.
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adj_.contains(v); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  const std::set<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;

  /// Smallest id strictly greater than every existing id (0 when empty).
  VertexId next_id() const;

  bool is_complete() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Ordered vertex sequence of a path in some host graph.
struct PathWitness {
  std::vector<VertexId> vertices;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

std::size_t degree(const Graph& g, VertexId v);

bool is_connected(const Graph& g);

/// `g` with the vertices of `removed` deleted.
Graph without_vertices(const Graph& g, const std::set<VertexId>& removed);

/// True when `g` is a single cycle (connected, n >= 3, every degree 2).
bool is_cycle(const Graph& g);

/// Subgraph test on ids: every vertex and edge of `sub` is present in `g`.
bool is_subgraph(const Graph& sub, const Graph& g);

}  // namespace conncraft
