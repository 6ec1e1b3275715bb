#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "conncraft/error.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"

namespace conncraft {
namespace {

// An anchor position on a core: a core vertex, or the slot-th of several
// new points subdividing a core edge (slots run from edge.u to edge.v).
struct Point {
  std::optional<VertexId> vertex;
  Edge edge;
  std::size_t slot = 0;
};

struct Move {
  AttachKind kind = AttachKind::HPath;
  std::vector<Point> anchors;
};

// A move carried out on the core itself with the shortest arms that keep
// the graph simple.
struct Realized {
  Graph host;
  std::map<Edge, std::vector<VertexId>> subdivisions;
  AttachSpec spec;
  Graph result;
};

Realized realize(const Graph& c, const Move& move) {
  std::map<Edge, std::size_t> counts;
  for (const Point& p : move.anchors) {
    if (!p.vertex) ++counts[p.edge];
  }
  Realized r;
  r.host = c;
  for (const auto& [e, count] : counts) {
    r.host.remove_edge(e.u, e.v);
    VertexId prev = e.u;
    std::vector<VertexId> ids;
    for (std::size_t j = 0; j < count; ++j) {
      const VertexId id = r.host.next_id();
      r.host.add_edge(prev, id);
      ids.push_back(id);
      prev = id;
    }
    r.host.add_edge(prev, e.v);
    r.subdivisions.emplace(e, std::move(ids));
  }
  std::vector<VertexId> anchors;
  for (const Point& p : move.anchors) {
    anchors.push_back(p.vertex ? *p.vertex : r.subdivisions.at(p.edge)[p.slot]);
  }
  if (move.kind == AttachKind::HPath) {
    r.spec = AttachSpec::path(anchors[0], anchors[1],
                              r.host.has_edge(anchors[0], anchors[1]) ? 2 : 1);
  } else {
    r.spec = AttachSpec{move.kind, anchors, std::vector<std::size_t>(anchors.size(), 1)};
  }
  r.result = apply_attachment(r.host, r.spec);
  return r;
}

bool point_adjacent(const Graph& c, const Point& p, const Point& q, std::size_t edge_count) {
  if (p.vertex && q.vertex) return c.has_edge(*p.vertex, *q.vertex);
  if (!p.vertex && !q.vertex) return p.edge == q.edge;
  const Point& v = p.vertex ? p : q;
  const Point& s = p.vertex ? q : p;
  if (*v.vertex == s.edge.u) return s.slot == 0;
  if (*v.vertex == s.edge.v) return s.slot + 1 == edge_count;
  return false;
}

// Core growth of a move, assuming it is admissible (then nothing contracts).
std::pair<std::size_t, std::size_t> growth(const Graph& c, const Move& move,
                                           const std::map<Edge, std::size_t>& counts) {
  std::size_t points = 0;
  for (const Point& p : move.anchors) points += p.vertex ? 0 : 1;
  if (move.kind != AttachKind::HPath) return {points + 1, points + move.anchors.size()};
  const Point& p = move.anchors[0];
  const Point& q = move.anchors[1];
  const std::size_t count = p.vertex ? (q.vertex ? 0 : counts.at(q.edge)) : counts.at(p.edge);
  const std::size_t extra = point_adjacent(c, p, q, count) ? 1 : 0;
  return {points + extra, points + 1 + extra};
}

// Every multiset of `arity` anchor positions: distinct core vertices plus
// up to two points per core edge.
void enumerate_moves(const Graph& c, AttachKind kind, std::size_t arity, bool edge_points,
                     std::vector<Move>& out) {
  struct Item {
    std::optional<VertexId> vertex;
    Edge edge;
  };
  std::vector<Item> items;
  for (VertexId v : c.vertices()) items.push_back({v, {}});
  if (edge_points) {
    for (const Edge& e : c.edges()) items.push_back({std::nullopt, e});
  }
  std::vector<std::size_t> mult(items.size(), 0);
  auto emit = [&]() {
    Move m;
    m.kind = kind;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t s = 0; s < mult[i]; ++s) {
        m.anchors.push_back(Point{items[i].vertex, items[i].edge, s});
      }
    }
    out.push_back(std::move(m));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (left == 0) {
      emit();
      return;
    }
    if (i == items.size()) return;
    const std::size_t cap = items[i].vertex ? 1 : 2;
    for (std::size_t take = std::min(cap, left);; --take) {
      mult[i] = take;
      self(self, i + 1, left - take);
      mult[i] = 0;
      if (take == 0) break;
    }
  };
  rec(rec, 0, arity);
}

std::vector<Move> moves_for(const Graph& c, std::size_t k) {
  std::vector<Move> out;
  const bool edge_points = k <= 3;
  enumerate_moves(c, AttachKind::HPath, 2, edge_points, out);
  if (k == 3) enumerate_moves(c, AttachKind::HYGraph, 3, true, out);
  if (k >= 4) enumerate_moves(c, AttachKind::KStar, k, false, out);
  return out;
}

using ClassKey = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;

ClassKey class_key(const Graph& g) {
  std::vector<std::size_t> degrees;
  for (VertexId v : g.vertices()) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return {g.num_vertices(), g.num_edges(), degrees};
}

using PathMap = std::map<Edge, std::vector<VertexId>>;

void store_path(PathMap& paths, VertexId from, VertexId to, std::vector<VertexId> path) {
  const Edge e(from, to);
  if (e.u != from) std::reverse(path.begin(), path.end());
  paths[e] = std::move(path);
}

std::vector<VertexId> path_from(const PathMap& paths, VertexId from, VertexId to) {
  std::vector<VertexId> p = paths.at(Edge(from, to));
  if (Edge(from, to).u != from) std::reverse(p.begin(), p.end());
  return p;
}

// Replays the move chain on a padded copy of `start`, where every seed edge
// and every arm carries `padding` extra vertices so that later steps find
// host vertices at the core edge points they anchor to. Returns nullopt
// when some core edge runs out of interior vertices.
std::optional<ConstructionTrace> materialize(const Graph& start, const Graph& start_core,
                                             const std::vector<Move>& chain, std::size_t k,
                                             std::size_t padding) {
  Graph host = start;
  for (const Edge& e : start.edges()) {
    VertexId prev = e.u;
    host.remove_edge(e.u, e.v);
    for (std::size_t i = 0; i < padding; ++i) {
      const VertexId id = host.next_id();
      host.add_edge(prev, id);
      prev = id;
    }
    host.add_edge(prev, e.v);
  }
  const std::vector<VertexId> kept = start_core.vertices();
  const CoreCertificate cert0 = core_preferring(host, {kept.begin(), kept.end()});
  if (!(cert0.core() == start_core)) {
    throw Error("search: padded seed lost its core representative");
  }

  ConstructionTrace trace;
  trace.k = k;
  trace.seed = host;
  PathMap paths = cert0.edge_paths();
  std::map<VertexId, VertexId> phi;
  for (VertexId v : kept) phi[v] = v;
  Graph state = start_core;

  for (const Move& move : chain) {
    const Realized r = realize(state, move);
    for (const auto& [e, ids] : r.subdivisions) {
      const std::vector<VertexId> p = path_from(paths, e.u, e.v);
      const std::size_t interior = p.size() - 2;
      const std::size_t count = ids.size();
      if (interior < count) return std::nullopt;
      paths.erase(e);
      VertexId prev = e.u;
      std::size_t prev_pos = 0;
      for (std::size_t j = 0; j < count; ++j) {
        const std::size_t pos = (j + 1) * (interior + 1) / (count + 1);
        phi[ids[j]] = p[pos];
        store_path(paths, prev, ids[j], {p.begin() + prev_pos, p.begin() + pos + 1});
        prev = ids[j];
        prev_pos = pos;
      }
      store_path(paths, prev, e.v, {p.begin() + prev_pos, p.end()});
    }

    AttachSpec real = r.spec;
    for (VertexId& a : real.anchors) a = phi.at(a);
    for (std::size_t& len : real.arms) len = std::max(len, padding + 1);
    const AttachmentLayout layout = attachment_layout(host, real);
    host = apply_attachment(host, real);
    trace.steps.push_back(real);

    const AttachmentLayout core_layout = attachment_layout(r.host, r.spec);
    if (r.spec.kind == AttachKind::HPath) {
      const VertexId a = r.spec.anchors[0];
      const VertexId b = r.spec.anchors[1];
      std::vector<VertexId> full{phi.at(a)};
      full.insert(full.end(), layout.arm_vertices[0].begin(), layout.arm_vertices[0].end());
      full.push_back(phi.at(b));
      if (core_layout.arm_vertices[0].empty()) {
        store_path(paths, a, b, full);
      } else {
        const VertexId mid = core_layout.arm_vertices[0][0];
        const std::size_t pos = full.size() / 2;
        phi[mid] = full[pos];
        store_path(paths, a, mid, {full.begin(), full.begin() + pos + 1});
        store_path(paths, mid, b, {full.begin() + pos, full.end()});
      }
    } else {
      const VertexId hub = *core_layout.hub;
      phi[hub] = *layout.hub;
      for (std::size_t i = 0; i < r.spec.anchors.size(); ++i) {
        std::vector<VertexId> arm{*layout.hub};
        arm.insert(arm.end(), layout.arm_vertices[i].begin(), layout.arm_vertices[i].end());
        arm.push_back(phi.at(r.spec.anchors[i]));
        store_path(paths, hub, r.spec.anchors[i], std::move(arm));
      }
    }

    const CoreCertificate cert = core(r.result);
    for (const ContractionRecord& rec : cert.log()) {
      std::vector<VertexId> left = path_from(paths, rec.left, rec.removed);
      const std::vector<VertexId> right = path_from(paths, rec.removed, rec.right);
      paths.erase(Edge(rec.left, rec.removed));
      paths.erase(Edge(rec.removed, rec.right));
      left.insert(left.end(), right.begin() + 1, right.end());
      store_path(paths, rec.left, rec.right, std::move(left));
    }
    state = cert.core();
  }
  return trace;
}

}  // namespace

std::optional<ConstructionTrace> search_construction_exists(const Graph& start,
                                                            const Graph& target,
                                                            std::size_t max_steps,
                                                            std::size_t k) {
  if (k < 2) throw PreconditionError("search needs k >= 2");
  const Graph start_core = core(start).core();
  const Graph target_core = core(target).core();
  const std::size_t max_n = target_core.num_vertices();
  const std::size_t max_m = target_core.num_edges();

  if (are_isomorphic(start_core, target_core)) {
    ConstructionTrace trace;
    trace.k = k;
    trace.seed = start;
    return trace;
  }
  if (start_core.num_vertices() > max_n || start_core.num_edges() > max_m) return std::nullopt;

  struct Node {
    Graph core;
    std::size_t parent = 0;
    Move move;
  };
  std::vector<Node> nodes{Node{start_core, 0, {}}};
  std::map<ClassKey, std::vector<std::size_t>> seen;
  seen[class_key(start_core)].push_back(0);

  auto chain_to = [&nodes](std::size_t id) {
    std::vector<Move> chain;
    while (id != 0) {
      chain.push_back(nodes[id].move);
      id = nodes[id].parent;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 1; depth <= max_steps && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const Graph c = nodes[id].core;
      for (const Move& move : moves_for(c, k)) {
        std::map<Edge, std::size_t> counts;
        for (const Point& p : move.anchors) {
          if (!p.vertex) ++counts[p.edge];
        }
        const auto [lambda, mu] = growth(c, move, counts);
        if (c.num_vertices() + lambda > max_n || c.num_edges() + mu > max_m) continue;

        const Realized r = realize(c, move);
        bool admissible = false;
        try {
          admissible = profile_tag(r.host, r.spec, k) != CaseTag::inadmissible;
        } catch (const PreconditionError&) {
          admissible = false;
        }
        if (!admissible) continue;
        Graph nc = core(r.result).core();
        if (nc.num_vertices() > max_n || nc.num_edges() > max_m) continue;

        auto& bucket = seen[class_key(nc)];
        const bool known = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t other) {
          return are_isomorphic(nodes[other].core, nc).has_value();
        });
        if (known) continue;
        const bool hit = are_isomorphic(nc, target_core).has_value();
        nodes.push_back(Node{std::move(nc), id, move});
        bucket.push_back(nodes.size() - 1);
        next.push_back(nodes.size() - 1);
        if (!hit) continue;

        const std::vector<Move> chain = chain_to(nodes.size() - 1);
        for (std::size_t padding : {0, 1, 2, 4, 8, 16, 32, 64}) {
          if (k >= 4 && padding > 0) break;
          if (auto trace = materialize(start, start_core, chain, k, padding)) return trace;
        }
        throw Error("search: found construction could not be realized on the host");
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace conncraft
