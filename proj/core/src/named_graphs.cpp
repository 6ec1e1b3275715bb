#include "conncraft/named_graphs.hpp"

#include "conncraft/error.hpp"

namespace conncraft::named {

Graph complete(std::size_t n) {
  Graph g;
  for (VertexId i = 0; i < n; ++i) g.add_vertex(i);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
  Graph g;
  for (VertexId i = 0; i < n; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % n));
  return g;
}

Graph path(std::size_t n) {
  Graph g;
  if (n == 1) g.add_vertex(0);
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g;
  for (VertexId i = 0; i < a; ++i) {
    for (VertexId j = 0; j < b; ++j) g.add_edge(i, static_cast<VertexId>(a + j));
  }
  return g;
}

Graph k222() {
  Graph g = complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

Graph prism() {
  return Graph{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
}

Graph diamond() {
  Graph g = complete(4);
  g.remove_edge(0, 1);
  return g;
}

Graph wheel(std::size_t rim) {
  Graph g;
  for (VertexId i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, static_cast<VertexId>(i % rim + 1));
  }
  return g;
}

Graph petersen() {
  Graph g;
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph cube() {
  Graph g;
  for (VertexId i = 0; i < 8; ++i) {
    for (VertexId bit = 1; bit < 8; bit <<= 1) {
      if (!(i & bit)) g.add_edge(i, i | bit);
    }
  }
  return g;
}

Graph theta(std::size_t p, std::size_t q, std::size_t r) {
  Graph g;
  g.add_vertex(0);
  g.add_vertex(1);
  VertexId next = 2;
  for (std::size_t len : {p, q, r}) {
    VertexId prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace conncraft::named
