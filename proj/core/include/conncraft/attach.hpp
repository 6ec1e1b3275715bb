#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conncraft/graph.hpp"

namespace conncraft {

enum class AttachKind { HPath, HYGraph, KStar };

std::string_view to_string(AttachKind kind);

/// An H-path, H-Y-graph or H-k-star to be glued onto a host graph.
///
/// HPath: two anchors, one entry in `arms` giving the path length; internal
/// vertices run from anchors[0] to anchors[1].
/// HYGraph / KStar: 3 resp. k anchors and one arm length per anchor, each
/// arm running from a fresh hub to its anchor.
struct AttachSpec {
  AttachKind kind = AttachKind::HPath;
  std::vector<VertexId> anchors;
  std::vector<std::size_t> arms;

  static AttachSpec path(VertexId a, VertexId b, std::size_t length = 1);
  static AttachSpec y_graph(VertexId a, VertexId b, VertexId c,
                            std::vector<std::size_t> arms = {1, 1, 1});
  static AttachSpec star(std::vector<VertexId> anchors, std::vector<std::size_t> arms = {});

  /// Number of attachment endpoints (2, 3 or k).
  std::size_t arity() const { return anchors.size(); }

  friend bool operator==(const AttachSpec&, const AttachSpec&) = default;
};

/// Ids the union introduces, in allocation order.
struct AttachmentLayout {
  std::optional<VertexId> hub;
  /// Internal vertices per arm: for HPath one sequence from anchors[0]
  /// towards anchors[1]; otherwise one per anchor, ordered hub -> anchor.
  std::vector<std::vector<VertexId>> arm_vertices;
};

/// Throws PreconditionError unless `spec` is a valid attachment onto `h`:
/// right anchor/arm counts, distinct anchors present in `h`, positive arm
/// lengths, and no length-1 H-path between already adjacent anchors.
void validate_attachment(const Graph& h, const AttachSpec& spec);

AttachmentLayout attachment_layout(const Graph& h, const AttachSpec& spec);

/// H union P (resp. Q, S). Fresh vertices get consecutive ids starting at
/// h.next_id(): the hub first, then each arm's internal vertices.
Graph apply_attachment(const Graph& h, const AttachSpec& spec);

/// Case labels of the (lambda, mu)-operation taxonomy. The digit is the
/// connectivity level the case belongs to; `k*` cases apply for k >= 4.
enum class CaseTag {
  c2a, c2b1, c2b2, c2c, c2d,
  c3a, c3b, c3c, c3d, c3e, c3f1, c3f2, c3g1, c3g2,
  cka, ckb,
  inadmissible,
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view text);

/// The fixed (lambda, mu) of a case; kb yields (1, k). Nullopt for
/// `inadmissible`.
std::optional<std::pair<int, int>> expected_pair(CaseTag tag, std::size_t k);

struct OpClass {
  /// Core vertex / edge growth, measured by running the core operator.
  int lambda = 0;
  int mu = 0;
  CaseTag tag = CaseTag::inadmissible;
  /// Connectivity level whose taxonomy produced `tag`.
  std::size_t level = 2;

  bool admissible() const { return tag != CaseTag::inadmissible; }
};

/// Where an anchor sits relative to a host core.
struct AnchorPlacement {
  VertexId anchor = 0;
  bool in_core = false;
  /// Core edge whose host path carries the anchor (non-core anchors only).
  Edge carrier;
};

/// Places each anchor against a core representative that keeps anchors
/// whenever the host structure allows it.
std::vector<AnchorPlacement> place_anchors(const Graph& h, const std::vector<VertexId>& anchors);

/// Case tag from the anchor profile alone, for connectivity level `k`
/// (2, 3, or >= 4). Requires core(h) to be k-connected.
CaseTag profile_tag(const Graph& h, const AttachSpec& spec, std::size_t k);

/// Full classification: measured (lambda, mu) plus the profile tag.
OpClass classify(const Graph& h, const AttachSpec& spec, std::size_t k);

/// Picks the taxonomy level from the spec and host: KStar(d >= 4) -> d,
/// otherwise min(3, connectivity of core(h)), at least 2.
OpClass classify(const Graph& h, const AttachSpec& spec);

bool is_2_admissible(const Graph& h, const AttachSpec& spec);
bool is_3_admissible(const Graph& h, const AttachSpec& spec);
bool is_k_admissible(const Graph& h, const AttachSpec& spec, std::size_t k);

}  // namespace conncraft
