#include "conncraft/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "conncraft/error.hpp"

namespace conncraft {
namespace {

// Vertex-split digraph: vertex i becomes in(i) = 2i -> out(i) = 2i + 1 with
// unit capacity; every undirected edge uv becomes out(u) -> in(v) and
// out(v) -> in(u), also unit capacity. Flow from out(a) to in(b) counts
// openly disjoint a-b paths.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : ids_(g.vertices()) {
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
    out_.resize(2 * ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      add_arc(in_node(static_cast<int>(i)), out_node(static_cast<int>(i)));
    }
    for (const Edge& e : g.edges()) {
      const int u = index_.at(e.u);
      const int v = index_.at(e.v);
      add_arc(out_node(u), in_node(v));
      add_arc(out_node(v), in_node(u));
    }
  }

  std::size_t max_flow(VertexId a, VertexId b, std::size_t limit) {
    for (Arc& arc : arcs_) arc.flow = 0;
    source_ = out_node(index_.at(a));
    sink_ = in_node(index_.at(b));
    std::size_t flow = 0;
    std::vector<int> parent_arc(out_.size());
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue{source_};
      parent_arc[source_] = -2;
      while (!queue.empty() && parent_arc[sink_] == -1) {
        const int node = queue.front();
        queue.pop_front();
        for (int id : out_[node]) {
          const Arc& arc = arcs_[id];
          if (arc.cap - arc.flow > 0 && parent_arc[arc.to] == -1) {
            parent_arc[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (parent_arc[sink_] == -1) break;
      for (int node = sink_; node != source_;) {
        const int id = parent_arc[node];
        arcs_[id].flow += 1;
        arcs_[arcs_[id].rev].flow -= 1;
        node = arcs_[arcs_[id].rev].to;
      }
      ++flow;
    }
    return flow;
  }

  // Decomposes the current flow into vertex paths. Loops that a flow
  // circulation might introduce are erased.
  std::vector<PathWitness> paths(std::size_t count) {
    std::vector<PathWitness> out;
    std::vector<bool> used(arcs_.size(), false);
    for (std::size_t p = 0; p < count; ++p) {
      std::vector<VertexId> seq{ids_[source_ / 2]};
      int node = source_;
      while (node != sink_) {
        int next = -1;
        for (int id : out_[node]) {
          const Arc& arc = arcs_[id];
          if (arc.forward && arc.flow > 0 && !used[id]) {
            used[id] = true;
            next = arc.to;
            break;
          }
        }
        if (next < 0) break;  // unreachable with a valid flow
        node = next;
        if (node % 2 == 0) {
          const VertexId v = ids_[node / 2];
          auto it = std::find(seq.begin(), seq.end(), v);
          if (it != seq.end()) {
            seq.erase(it + 1, seq.end());
          } else {
            seq.push_back(v);
          }
        }
      }
      out.push_back(PathWitness{std::move(seq)});
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    int rev;
    bool forward;
  };

  static int in_node(int i) { return 2 * i; }
  static int out_node(int i) { return 2 * i + 1; }

  void add_arc(int from, int to) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{to, 1, 0, id + 1, true});
    arcs_.push_back(Arc{from, 0, 0, id, false});
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
  }

  std::vector<VertexId> ids_;
  std::map<VertexId, int> index_;
  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
  int source_ = 0;
  int sink_ = 0;
};

void require_pair(const Graph& g, VertexId a, VertexId b) {
  if (!g.has_vertex(a)) throw PreconditionError("unknown vertex " + std::to_string(a));
  if (!g.has_vertex(b)) throw PreconditionError("unknown vertex " + std::to_string(b));
  if (a == b) throw PreconditionError("path endpoints must be distinct");
}

bool disconnected_after_removal(const Graph& g, const std::set<VertexId>& cut) {
  return !is_connected(without_vertices(g, cut));
}

}  // namespace

std::optional<std::vector<PathWitness>> openly_disjoint_paths(const Graph& g,
                                                              VertexId a,
                                                              VertexId b,
                                                              std::size_t k) {
  require_pair(g, a, b);
  SplitNetwork net(g);
  if (net.max_flow(a, b, k) < k) return std::nullopt;
  return net.paths(k);
}

std::size_t local_connectivity(const Graph& g, VertexId a, VertexId b,
                               std::size_t limit) {
  require_pair(g, a, b);
  SplitNetwork net(g);
  return net.max_flow(a, b, limit);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw PreconditionError("vertex connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  const auto verts = g.vertices();
  SplitNetwork net(g);
  std::size_t best = n - 1;
  // Some vertex among the first best + 1 lies outside every minimum cut, so
  // scanning sources in that prefix is enough.
  for (std::size_t i = 0; i < n && i <= best; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, net.max_flow(verts[i], verts[j], best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw PreconditionError("connectivity needs at least two vertices");
  if (k == 0) return true;
  if (n < k + 1 || !is_connected(g)) return false;
  const auto verts = g.vertices();
  SplitNetwork net(g);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (net.max_flow(verts[i], verts[j], k) < k) return false;
    }
  }
  return true;
}

VertexCut min_vertex_cut_bruteforce(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw PreconditionError("vertex cut needs at least two vertices");
  }
  if (g.is_complete()) throw PreconditionError("complete graph has no vertex cut");
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  for (std::size_t size = 0; size + 2 <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::set<VertexId> cut;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) cut.insert(verts[i]);
      }
      if (disconnected_after_removal(g, cut)) {
        return VertexCut{size, {cut.begin(), cut.end()}};
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  // A non-complete graph always has a separator of size at most n - 2.
  throw PreconditionError("no vertex cut found");
}

}  // namespace conncraft
