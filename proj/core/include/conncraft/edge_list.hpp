#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "conncraft/graph.hpp"

namespace conncraft {

// Edge-list text format:
//
//   n m
//   u v        (m lines, non-negative integer ids)
//
// Blank lines and everything after '#' are ignored. Ids need not be
// contiguous; the vertex set is the set of edge endpoints, padded with the
// smallest unused ids when the header announces more vertices than appear
// in edges (isolated vertices).

/// Builds a graph from a vertex count and edge set using the padding rule
/// above. Throws ParseError when `edges` names more than `n` vertices.
Graph graph_from_edge_set(std::size_t n, const std::vector<Edge>& edges);

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

std::string format_edge_list(const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace conncraft
