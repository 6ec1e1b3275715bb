#include "conncraft/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "conncraft/error.hpp"

namespace conncraft {
namespace {

struct Dense {
  std::vector<VertexId> ids;
  std::vector<std::vector<int>> nbrs;
  std::vector<std::vector<char>> adj;
};

Dense densify(const Graph& g) {
  Dense d;
  d.ids = g.vertices();
  const std::size_t n = d.ids.size();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < n; ++i) index[d.ids[i]] = static_cast<int>(i);
  d.nbrs.resize(n);
  d.adj.assign(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    const int u = index[e.u];
    const int v = index[e.v];
    d.nbrs[u].push_back(v);
    d.nbrs[v].push_back(u);
    d.adj[u][v] = d.adj[v][u] = 1;
  }
  return d;
}

// Colour refinement run jointly on both graphs so colour ids are comparable.
void refine(const Dense& g, const Dense& h, std::vector<int>& cg, std::vector<int>& ch) {
  cg.resize(g.ids.size());
  ch.resize(h.ids.size());
  for (std::size_t i = 0; i < cg.size(); ++i) cg[i] = static_cast<int>(g.nbrs[i].size());
  for (std::size_t i = 0; i < ch.size(); ++i) ch[i] = static_cast<int>(h.nbrs[i].size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const Dense& d, const std::vector<int>& c, std::size_t v) {
      std::vector<int> sig{c[v]};
      std::vector<int> around;
      for (int w : d.nbrs[v]) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      return sig;
    };
    std::vector<std::vector<int>> sg(cg.size());
    std::vector<std::vector<int>> sh(ch.size());
    for (std::size_t v = 0; v < cg.size(); ++v) palette.try_emplace(sg[v] = signature(g, cg, v), 0);
    for (std::size_t v = 0; v < ch.size(); ++v) palette.try_emplace(sh[v] = signature(h, ch, v), 0);
    int next = 0;
    for (auto& [_, colour] : palette) colour = next++;
    for (std::size_t v = 0; v < cg.size(); ++v) cg[v] = palette[sg[v]];
    for (std::size_t v = 0; v < ch.size(); ++v) ch[v] = palette[sh[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
}

class Matcher {
 public:
  Matcher(const Dense& g, const Dense& h, std::vector<int> cg, std::vector<int> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)) {
    const std::size_t n = g_.ids.size();
    map_.assign(n, -1);
    used_.assign(n, false);
    order_ = search_order();
  }

  bool run() { return extend(0); }

  std::vector<int> const& mapping() const { return map_; }

 private:
  // Next vertex = most already-ordered neighbours, ties to rarer colours.
  std::vector<int> search_order() const {
    const std::size_t n = g_.ids.size();
    std::map<int, int> class_size;
    for (int c : cg_) ++class_size[c];
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || links[v] > links[best] ||
            (links[v] == links[best] && class_size[cg_[v]] < class_size[cg_[best]])) {
          best = static_cast<int>(v);
        }
      }
      placed[best] = true;
      order.push_back(best);
      for (int w : g_.nbrs[best]) ++links[w];
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    for (std::size_t cand = 0; cand < h_.ids.size(); ++cand) {
      if (used_[cand] || ch_[cand] != cg_[x]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const int y = order_[d];
        consistent = g_.adj[x][y] == h_.adj[cand][map_[y]];
      }
      if (!consistent) continue;
      map_[x] = static_cast<int>(cand);
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
      map_[x] = -1;
    }
    return false;
  }

  const Dense& g_;
  const Dense& h_;
  std::vector<int> cg_;
  std::vector<int> ch_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<VertexMap> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    return std::nullopt;
  }
  const Dense dg = densify(g);
  const Dense dh = densify(h);
  std::vector<int> cg;
  std::vector<int> ch;
  refine(dg, dh, cg, ch);
  std::vector<int> sorted_g = cg;
  std::vector<int> sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return std::nullopt;

  Matcher matcher(dg, dh, std::move(cg), std::move(ch));
  if (!matcher.run()) return std::nullopt;
  VertexMap out;
  for (std::size_t i = 0; i < dg.ids.size(); ++i) {
    out[dg.ids[i]] = dh.ids[matcher.mapping()[i]];
  }
  return out;
}

bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (map.size() != g.num_vertices()) return false;
  std::set<VertexId> image;
  for (const auto& [from, to] : map) {
    if (!g.has_vertex(from) || !h.has_vertex(to)) return false;
    image.insert(to);
  }
  if (image.size() != map.size()) return false;
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(map.at(e.u), map.at(e.v))) return false;
  }
  return true;
}

Graph relabel(const Graph& g, const VertexMap& map) {
  Graph out;
  for (VertexId v : g.vertices()) {
    auto it = map.find(v);
    if (it == map.end()) throw PreconditionError("relabel map misses vertex " + std::to_string(v));
    out.add_vertex(it->second);
  }
  for (const Edge& e : g.edges()) out.add_edge(map.at(e.u), map.at(e.v));
  return out;
}

}  // namespace conncraft
