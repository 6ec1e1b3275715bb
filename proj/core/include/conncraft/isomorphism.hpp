#pragma once

#include <map>
#include <optional>

#include "conncraft/graph.hpp"

namespace conncraft {

using VertexMap = std::map<VertexId, VertexId>;

/// A bijection V(g) -> V(h) preserving adjacency in both directions, or
/// nullopt. Backtracking over colour-refined candidate classes; intended
/// for desk-scale graphs (a few dozen vertices).
std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h);

/// True when `map` is a bijection V(g) -> V(h) with uv in E(g) iff
/// map(u)map(v) in E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& map);

/// Copy of `g` with every id replaced through `map` (which must cover V(g)).
Graph relabel(const Graph& g, const VertexMap& map);

}  // namespace conncraft
