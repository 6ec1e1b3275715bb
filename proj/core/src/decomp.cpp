#include "conncraft/decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "conncraft/connectivity.hpp"
#include "conncraft/error.hpp"
#include "conncraft/series.hpp"

namespace conncraft {
namespace {

// A piece in input ids: anchors, optional hub, and per-arm internals laid
// out like AttachmentLayout.
struct Piece {
  AttachKind kind = AttachKind::HPath;
  std::vector<VertexId> anchors;
  std::optional<VertexId> hub;
  std::vector<std::vector<VertexId>> arms;
};

// Replays pieces on top of `seed` (input ids), recording the fresh-id to
// input-id correspondence. Anchors of every step are put in ascending
// replay-id order.
Decomposition build_trace(const Graph& seed, const std::vector<Piece>& pieces, std::size_t k) {
  Decomposition out;
  out.trace.k = k;
  out.trace.seed = seed;
  std::map<VertexId, VertexId> from_input;
  for (VertexId v : seed.vertices()) {
    out.to_input[v] = v;
    from_input[v] = v;
  }
  Graph current = seed;
  for (Piece piece : pieces) {
    std::vector<VertexId> anchors;
    for (VertexId a : piece.anchors) anchors.push_back(from_input.at(a));
    std::vector<std::size_t> order(anchors.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return anchors[x] < anchors[y]; });

    AttachSpec spec;
    spec.kind = piece.kind;
    std::vector<std::vector<VertexId>> arms;
    if (piece.kind == AttachKind::HPath) {
      arms = piece.arms;
      if (order[0] != 0) std::reverse(arms[0].begin(), arms[0].end());
      for (std::size_t i : order) spec.anchors.push_back(anchors[i]);
      spec.arms = {arms[0].size() + 1};
    } else {
      for (std::size_t i : order) {
        spec.anchors.push_back(anchors[i]);
        arms.push_back(piece.arms[i]);
        spec.arms.push_back(piece.arms[i].size() + 1);
      }
    }
    const AttachmentLayout layout = attachment_layout(current, spec);
    if (layout.hub) {
      out.to_input[*layout.hub] = *piece.hub;
      from_input[*piece.hub] = *layout.hub;
    }
    for (std::size_t i = 0; i < arms.size(); ++i) {
      for (std::size_t j = 0; j < arms[i].size(); ++j) {
        out.to_input[layout.arm_vertices[i][j]] = arms[i][j];
        from_input[arms[i][j]] = layout.arm_vertices[i][j];
      }
    }
    current = apply_attachment(current, spec);
    out.trace.steps.push_back(std::move(spec));
  }
  return out;
}

// Walks from `from` through `first` along degree-2 vertices; returns the
// internal vertices and the end vertex.
std::pair<std::vector<VertexId>, VertexId> walk_chain(const Graph& g, VertexId from,
                                                      VertexId first) {
  std::vector<VertexId> inner;
  VertexId prev = from;
  VertexId cur = first;
  while (g.degree(cur) == 2 && cur != from) {
    inner.push_back(cur);
    const auto& nb = g.neighbors(cur);
    const VertexId next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
    prev = cur;
    cur = next;
  }
  return {inner, cur};
}

bool has_3_connected_core(const Graph& g) {
  if (g.num_vertices() < 4 || !is_connected(g)) return false;
  return is_k_connected(core(g).core(), 3);
}

std::optional<RemovalCandidate> path_candidate(const Graph& g, VertexId a,
                                               std::vector<VertexId> inner, VertexId b) {
  if (a == b || g.degree(b) < 3) return std::nullopt;
  if (b < a) {
    std::swap(a, b);
    std::reverse(inner.begin(), inner.end());
  }
  RemovalCandidate c;
  c.kind = AttachKind::HPath;
  c.anchors = {a, b};
  c.vertices = inner;
  if (inner.empty()) c.edges = {Edge(a, b)};
  c.spec = AttachSpec::path(a, b, inner.size() + 1);
  c.layout.arm_vertices = {std::move(inner)};
  return c;
}

std::optional<RemovalCandidate> y_candidate(const Graph& g, VertexId hub) {
  std::vector<std::pair<VertexId, std::vector<VertexId>>> arms;
  for (VertexId w : g.neighbors(hub)) {
    auto [inner, end] = walk_chain(g, hub, w);
    if (end == hub || g.degree(end) < 3) return std::nullopt;
    arms.emplace_back(end, std::move(inner));
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0].first == arms[1].first || arms[1].first == arms[2].first) return std::nullopt;
  RemovalCandidate c;
  c.kind = AttachKind::HYGraph;
  c.vertices.push_back(hub);
  c.layout.hub = hub;
  for (auto& [end, inner] : arms) {
    c.anchors.push_back(end);
    c.spec.arms.push_back(inner.size() + 1);
    c.vertices.insert(c.vertices.end(), inner.begin(), inner.end());
    c.layout.arm_vertices.push_back(std::move(inner));
  }
  c.spec.kind = AttachKind::HYGraph;
  c.spec.anchors = c.anchors;
  return c;
}

bool avoids(const RemovalCandidate& c, const Graph& constructed) {
  for (VertexId v : c.vertices) {
    if (constructed.has_vertex(v)) return false;
  }
  for (const Edge& e : c.edges) {
    if (constructed.has_edge(e)) return false;
  }
  return true;
}

Piece to_piece(const RemovalCandidate& c) {
  return Piece{c.kind, c.anchors, c.layout.hub, c.layout.arm_vertices};
}

class Peeler {
 public:
  bool run(const Graph& current) {
    if (core(current).core().num_vertices() == 4) {
      seed_ = current;
      return true;
    }
    if (failed_.contains(current.edges())) return false;
    for (const RemovalCandidate& c : find_removal_candidates(current, Graph{})) {
      stack_.push_back(c);
      if (run(remove_candidate(current, c))) return true;
      stack_.pop_back();
    }
    failed_.insert(current.edges());
    return false;
  }

  const Graph& seed() const { return seed_; }
  // Innermost removal first = forward construction order.
  std::vector<Piece> pieces() const {
    std::vector<Piece> out;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) out.push_back(to_piece(*it));
    return out;
  }

 private:
  Graph seed_;
  std::vector<RemovalCandidate> stack_;
  std::set<std::vector<Edge>> failed_;
};

}  // namespace

Graph remove_candidate(const Graph& g, const RemovalCandidate& c) {
  Graph out = g;
  for (const Edge& e : c.edges) out.remove_edge(e.u, e.v);
  for (VertexId v : c.vertices) out.remove_vertex(v);
  return out;
}

std::vector<RemovalCandidate> find_removal_candidates(const Graph& g, const Graph& constructed) {
  std::vector<RemovalCandidate> found;
  std::set<std::tuple<VertexId, VertexId, std::vector<VertexId>>> seen_paths;
  for (VertexId a : g.vertices()) {
    if (g.degree(a) < 3) continue;
    for (VertexId w : g.neighbors(a)) {
      auto [inner, end] = walk_chain(g, a, w);
      auto c = path_candidate(g, a, std::move(inner), end);
      if (!c) continue;
      if (!seen_paths.emplace(c->anchors[0], c->anchors[1], c->vertices).second) continue;
      found.push_back(std::move(*c));
    }
    if (g.degree(a) == 3) {
      if (auto c = y_candidate(g, a)) found.push_back(std::move(*c));
    }
  }
  std::vector<RemovalCandidate> out;
  for (RemovalCandidate& c : found) {
    if (!avoids(c, constructed)) continue;
    if (!has_3_connected_core(remove_candidate(g, c))) continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const RemovalCandidate& x, const RemovalCandidate& y) {
    return std::tie(x.kind, x.anchors, x.vertices) < std::tie(y.kind, y.anchors, y.vertices);
  });
  return out;
}

Decomposition decompose_3(const Graph& g) {
  if (!has_3_connected_core(g)) {
    throw PreconditionError("decompose_3 needs a connected graph with 3-connected core");
  }
  Peeler peeler;
  if (!peeler.run(g)) {
    throw Error("decomposition exhausted its search without reaching a K4-class seed");
  }
  return build_trace(peeler.seed(), peeler.pieces(), 3);
}

Decomposition ear_decompose_2(const Graph& g) {
  if (g.num_vertices() < 3 || !is_k_connected(g, 2)) {
    throw PreconditionError("ear decomposition needs a 2-connected graph");
  }

  // Shortest cycle through some edge uv: shortest u-v path avoiding uv.
  std::vector<VertexId> best;
  for (const Edge& e : g.edges()) {
    std::map<VertexId, VertexId> parent{{e.u, e.u}};
    std::deque<VertexId> queue{e.u};
    while (!queue.empty() && !parent.contains(e.v)) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (x == e.u && y == e.v) continue;
        if (parent.emplace(y, x).second) queue.push_back(y);
      }
    }
    std::vector<VertexId> cycle;
    for (VertexId x = e.v; x != e.u; x = parent.at(x)) cycle.push_back(x);
    cycle.push_back(e.u);
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    if (best.size() == 3) break;
  }

  Graph h;
  for (std::size_t i = 0; i < best.size(); ++i) h.add_edge(best[i], best[(i + 1) % best.size()]);
  const Graph seed = h;

  std::vector<Piece> pieces;
  while (h.num_edges() < g.num_edges()) {
    std::vector<VertexId> ear;
    for (const Edge& e : g.edges()) {
      if (!h.has_edge(e) && h.has_vertex(e.u) && h.has_vertex(e.v)) {
        ear = {e.u, e.v};
        break;
      }
    }
    if (ear.empty()) {
      for (const Edge& e : g.edges()) {
        if (h.has_vertex(e.u) == h.has_vertex(e.v)) continue;
        const VertexId x = h.has_vertex(e.u) ? e.u : e.v;
        const VertexId y = e.other(x);
        std::map<VertexId, VertexId> parent{{y, x}};
        std::deque<VertexId> queue{y};
        std::optional<std::pair<VertexId, VertexId>> exit;  // (outside vertex, H vertex)
        while (!queue.empty() && !exit) {
          const VertexId w = queue.front();
          queue.pop_front();
          for (VertexId z : g.neighbors(w)) {
            if (h.has_vertex(z)) {
              if (z != x && !(w == y && z == x)) {
                exit = {w, z};
                break;
              }
            } else if (parent.emplace(z, w).second) {
              queue.push_back(z);
            }
          }
        }
        if (!exit) continue;
        std::vector<VertexId> back{exit->second};
        for (VertexId w = exit->first; w != x; w = parent.at(w)) back.push_back(w);
        back.push_back(x);
        ear.assign(back.rbegin(), back.rend());
        break;
      }
    }
    if (ear.empty()) throw Error("ear decomposition found no ear");
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) h.add_edge(ear[i], ear[i + 1]);
    pieces.push_back(Piece{AttachKind::HPath,
                           {ear.front(), ear.back()},
                           std::nullopt,
                           {{ear.begin() + 1, ear.end() - 1}}});
  }
  return build_trace(seed, pieces, 2);
}

}  // namespace conncraft
