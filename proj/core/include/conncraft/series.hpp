#pragma once

#include <map>
#include <set>
#include <vector>

#include "conncraft/graph.hpp"

namespace conncraft {

/// One series-contraction: `removed` (degree 2) was suppressed and its
/// neighbours `left`, `right` joined by a new edge.
struct ContractionRecord {
  VertexId removed = 0;
  VertexId left = 0;
  VertexId right = 0;

  friend bool operator==(const ContractionRecord&, const ContractionRecord&) = default;
};

/// The ~2-core of a host graph together with the contractions that produced
/// it. Core vertex ids are host ids.
class CoreCertificate {
 public:
  CoreCertificate(Graph core, std::vector<ContractionRecord> log)
      : core_(std::move(core)), log_(std::move(log)) {}

  const Graph& core() const { return core_; }
  const std::vector<ContractionRecord>& log() const { return log_; }

  /// Host path behind each core edge, listed from `edge.u` to `edge.v`.
  std::map<Edge, std::vector<VertexId>> edge_paths() const;

  /// For every suppressed host vertex, the core edge whose host path
  /// carries it.
  std::map<VertexId, Edge> carrier_edges() const;

  /// Undoes the log as series-expansions; yields the host graph exactly.
  Graph reconstruct() const;

 private:
  Graph core_;
  std::vector<ContractionRecord> log_;
};

/// True when `b` has degree 2 and its two neighbours are non-adjacent.
bool is_contractible(const Graph& g, VertexId b);

/// Replaces path a-b-c by edge ac. Throws PreconditionError when b does not
/// have degree 2 or when ac already exists.
Graph series_contract(const Graph& g, VertexId b);

/// Replaces edge ac by path a-fresh-c.
Graph series_expand(const Graph& g, VertexId a, VertexId c, VertexId fresh);

std::vector<VertexId> contractible_vertices(const Graph& g);

/// Contracts the smallest contractible vertex until none is left. Requires a
/// connected graph with at least two vertices.
CoreCertificate core(const Graph& g);

/// Same fixpoint, but vertices in `keep` are contracted only once no other
/// vertex is contractible. The result is another representative of the
/// same core, one that retains as many `keep` vertices as the structure
/// allows.
CoreCertificate core_preferring(const Graph& g, const std::set<VertexId>& keep);

bool is_core(const Graph& g);

/// Decides G ~2 H by comparing cores up to isomorphism.
bool sim2_equivalent(const Graph& g, const Graph& h);

}  // namespace conncraft
