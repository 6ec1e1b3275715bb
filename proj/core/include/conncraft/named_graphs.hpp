#pragma once

#include <cstddef>

#include "conncraft/graph.hpp"

// Small named graphs with ids 0..n-1.
namespace conncraft::named {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// K_{2,2,2}: the octahedron, i.e. K6 minus a perfect matching.
Graph k222();
/// Triangular prism K3 x K2.
Graph prism();
/// K4 minus one edge.
Graph diamond();
/// Wheel with `rim` rim vertices; hub is vertex 0.
Graph wheel(std::size_t rim);
Graph petersen();
Graph cube();
/// Two vertices joined by three internally disjoint paths with the given
/// numbers of internal vertices.
Graph theta(std::size_t p, std::size_t q, std::size_t r);

}  // namespace conncraft::named
