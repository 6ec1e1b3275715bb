#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conncraft/graph.hpp"

namespace corpus {

using conncraft::Graph;

struct Entry {
  std::string name;
  Graph graph;
};

/// Reads tests/fixtures/<name>.
Graph fixture(const std::string& name);

/// Named small graphs plus the figure fixtures.
std::vector<Entry> named();

/// Random spanning tree plus each remaining pair with probability p.
Graph random_connected(std::mt19937_64& rng, std::size_t n, double p);

/// Subdivides `count` random edges.
Graph subdivide_randomly(Graph g, std::mt19937_64& rng, std::size_t count);

/// Random connected graphs, some with subdivided edges, all with at most
/// `max_n` vertices.
std::vector<Entry> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_n);

/// Named graphs and generator output whose core is 3-connected, at most
/// `max_n` vertices, at least `min_count` entries.
std::vector<Entry> three_core(std::size_t min_count, std::size_t max_n);

/// named() followed by random_graphs(), filtered to at most `max_n` vertices.
std::vector<Entry> all(std::size_t max_n, std::size_t random_count = 60);

}  // namespace corpus
