#pragma once

#include <vector>

#include "conncraft/attach.hpp"
#include "conncraft/graph.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/synth.hpp"

namespace conncraft {

/// A trace that rebuilds an input graph, plus the id correspondence.
struct Decomposition {
  ConstructionTrace trace;
  /// Replayed id -> input id; an isomorphism from replay(trace) onto the
  /// input graph.
  VertexMap to_input;
};

/// Cycle seed (a shortest cycle) plus |E| - |V| H-path ears. Throws
/// PreconditionError unless `g` is 2-connected.
Decomposition ear_decompose_2(const Graph& g);

/// Trace from a seed whose core is K4, with H-path and H-Y-graph steps that
/// verify under the 3-connected rules. Throws PreconditionError unless
/// core(g) is 3-connected.
Decomposition decompose_3(const Graph& g);

/// The last piece of a construction, seen from the finished graph.
struct RemovalCandidate {
  AttachKind kind = AttachKind::HPath;
  /// Vertices that stay behind; for an H-Y-graph listed per arm.
  std::vector<VertexId> anchors;
  /// Hub (H-Y-graphs only) followed by all arm-internal vertices.
  std::vector<VertexId> vertices;
  /// Edge to delete for a length-1 H-path; empty otherwise.
  std::vector<Edge> edges;
  /// Re-attaching this onto the remainder rebuilds the graph up to the ids
  /// of `vertices`.
  AttachSpec spec;
  /// Per-arm internal vertices, ordered like AttachmentLayout.
  AttachmentLayout layout;

  friend bool operator==(const RemovalCandidate& a, const RemovalCandidate& b) {
    return a.kind == b.kind && a.anchors == b.anchors && a.vertices == b.vertices &&
           a.edges == b.edges && a.spec == b.spec;
  }
};

/// `g` without the candidate's vertices and edges.
Graph remove_candidate(const Graph& g, const RemovalCandidate& c);

/// Every H-path (a maximal chain of degree-2 vertices between two distinct
/// branch vertices) and every H-Y-graph (a degree-3 hub whose three chains
/// end at distinct branch vertices) that avoids the edges and non-anchor
/// vertices of `constructed` and whose removal leaves a connected graph
/// with 3-connected core. Sorted by (kind, anchors, vertices).
std::vector<RemovalCandidate> find_removal_candidates(const Graph& g, const Graph& constructed);

}  // namespace conncraft
