#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conncraft/graph.hpp"

namespace conncraft {

/// Up to `k` pairwise openly disjoint a-b paths, or nullopt when fewer than
/// `k` exist. When a and b are adjacent the edge ab counts as one path.
///
/// Computed as a unit-capacity max-flow on the vertex-split digraph, so the
/// answer is exact (Menger) rather than heuristic.
std::optional<std::vector<PathWitness>> openly_disjoint_paths(const Graph& g,
                                                              VertexId a,
                                                              VertexId b,
                                                              std::size_t k);

/// Maximum number of openly disjoint a-b paths, capped at `limit`.
std::size_t local_connectivity(const Graph& g, VertexId a, VertexId b,
                               std::size_t limit);

/// Largest k such that every vertex pair is joined by k openly disjoint
/// paths. Complete graphs K_n give n - 1; disconnected graphs give 0.
/// Throws PreconditionError for fewer than two vertices.
std::size_t vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, std::size_t k);

struct VertexCut {
  std::size_t size = 0;
  std::vector<VertexId> vertices;
};

/// Smallest separating vertex set by exhaustive subset enumeration in
/// increasing size. Exponential; meant as an oracle for graphs up to about
/// a dozen vertices. Throws PreconditionError on complete graphs.
VertexCut min_vertex_cut_bruteforce(const Graph& g);

}  // namespace conncraft
