#include "conncraft/attach.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "conncraft/connectivity.hpp"
#include "conncraft/error.hpp"
#include "conncraft/series.hpp"

namespace conncraft {
namespace {

constexpr std::array<std::pair<CaseTag, std::string_view>, 17> kTagNames{{
    {CaseTag::c2a, "2a"},   {CaseTag::c2b1, "2b1"}, {CaseTag::c2b2, "2b2"},
    {CaseTag::c2c, "2c"},   {CaseTag::c2d, "2d"},   {CaseTag::c3a, "3a"},
    {CaseTag::c3b, "3b"},   {CaseTag::c3c, "3c"},   {CaseTag::c3d, "3d"},
    {CaseTag::c3e, "3e"},   {CaseTag::c3f1, "3f1"}, {CaseTag::c3f2, "3f2"},
    {CaseTag::c3g1, "3g1"}, {CaseTag::c3g2, "3g2"}, {CaseTag::cka, "ka"},
    {CaseTag::ckb, "kb"},   {CaseTag::inadmissible, "inadmissible"},
}};

std::string id_str(VertexId v) { return std::to_string(v); }

// Two-anchor profile shared by the H-path rules of every level.
enum class PairProfile {
  CoreNonAdjacent,  // both in the core, no core edge between them
  CoreAdjacent,     // both in the core, joined by a core edge
  CoreAndInterior,  // one core anchor off the other's carrier edge
  CoreOnOwnCarrier, // the core anchor is an endpoint of the other's carrier
  InteriorDistinct, // both suppressed, on different carrier edges
  InteriorShared,   // both suppressed on the same carrier edge
};

PairProfile pair_profile(const Graph& host_core, const AnchorPlacement& p,
                         const AnchorPlacement& q) {
  if (p.in_core && q.in_core) {
    return host_core.has_edge(p.anchor, q.anchor) ? PairProfile::CoreAdjacent
                                                  : PairProfile::CoreNonAdjacent;
  }
  if (p.in_core || q.in_core) {
    const AnchorPlacement& c = p.in_core ? p : q;
    const AnchorPlacement& s = p.in_core ? q : p;
    return s.carrier.contains(c.anchor) ? PairProfile::CoreOnOwnCarrier
                                        : PairProfile::CoreAndInterior;
  }
  return p.carrier == q.carrier ? PairProfile::InteriorShared : PairProfile::InteriorDistinct;
}

CaseTag path_tag_level2(PairProfile profile) {
  switch (profile) {
    case PairProfile::CoreNonAdjacent: return CaseTag::c2a;
    case PairProfile::CoreAdjacent: return CaseTag::c2b2;
    case PairProfile::CoreAndInterior: return CaseTag::c2b1;
    // The core anchor closes a parallel route to the suppressed one: two new
    // core vertices, three new core edges, same growth as case (c).
    case PairProfile::CoreOnOwnCarrier: return CaseTag::c2c;
    case PairProfile::InteriorDistinct: return CaseTag::c2c;
    case PairProfile::InteriorShared: return CaseTag::c2d;
  }
  return CaseTag::inadmissible;
}

CaseTag path_tag_level3(PairProfile profile) {
  switch (profile) {
    case PairProfile::CoreNonAdjacent: return CaseTag::c3a;
    case PairProfile::CoreAndInterior: return CaseTag::c3b;
    case PairProfile::InteriorDistinct: return CaseTag::c3d;
    // Each of these leaves a degree-2 vertex in the new core.
    case PairProfile::CoreAdjacent:
    case PairProfile::CoreOnOwnCarrier:
    case PairProfile::InteriorShared: return CaseTag::inadmissible;
  }
  return CaseTag::inadmissible;
}

CaseTag y_tag_level3(const std::vector<AnchorPlacement>& places) {
  std::vector<VertexId> core_anchors;
  std::vector<Edge> carriers;
  for (const AnchorPlacement& p : places) {
    if (p.in_core) {
      core_anchors.push_back(p.anchor);
    } else {
      carriers.push_back(p.carrier);
    }
  }
  switch (core_anchors.size()) {
    case 3:
      return CaseTag::c3c;
    case 2: {
      // {a,b} equal to the carrier's endpoints isolates the two new core
      // vertices behind a 2-cut.
      const Edge pair(core_anchors[0], core_anchors[1]);
      return pair == carriers[0] ? CaseTag::inadmissible : CaseTag::c3e;
    }
    case 1:
      if (carriers[0] != carriers[1]) return CaseTag::c3f2;
      return carriers[0].contains(core_anchors[0]) ? CaseTag::inadmissible : CaseTag::c3f1;
    default: {
      std::sort(carriers.begin(), carriers.end());
      const auto distinct = static_cast<std::size_t>(
          std::unique(carriers.begin(), carriers.end()) - carriers.begin());
      if (distinct == 3) return CaseTag::c3g2;
      if (distinct == 2) return CaseTag::c3g1;
      return CaseTag::inadmissible;
    }
  }
}

void require_level(const Graph& h, std::size_t k) {
  if (k < 2) throw PreconditionError("connectivity level must be at least 2");
  const CoreCertificate cert = core(h);
  if (!is_k_connected(cert.core(), k)) {
    throw PreconditionError("host core is not " + std::to_string(k) + "-connected");
  }
}

std::size_t auto_level(const Graph& h, const AttachSpec& spec) {
  if (spec.kind == AttachKind::KStar && spec.arity() >= 4) return spec.arity();
  const Graph host_core = core(h).core();
  const std::size_t kappa = host_core.num_vertices() < 2 ? 0 : vertex_connectivity(host_core);
  if (spec.kind != AttachKind::HPath) return 3;
  return std::clamp<std::size_t>(kappa, 2, 3);
}

}  // namespace

std::string_view to_string(AttachKind kind) {
  switch (kind) {
    case AttachKind::HPath: return "hpath";
    case AttachKind::HYGraph: return "hy";
    case AttachKind::KStar: return "kstar";
  }
  return "?";
}

AttachSpec AttachSpec::path(VertexId a, VertexId b, std::size_t length) {
  return AttachSpec{AttachKind::HPath, {a, b}, {length}};
}

AttachSpec AttachSpec::y_graph(VertexId a, VertexId b, VertexId c,
                               std::vector<std::size_t> arms) {
  return AttachSpec{AttachKind::HYGraph, {a, b, c}, std::move(arms)};
}

AttachSpec AttachSpec::star(std::vector<VertexId> anchors, std::vector<std::size_t> arms) {
  if (arms.empty()) arms.assign(anchors.size(), 1);
  return AttachSpec{AttachKind::KStar, std::move(anchors), std::move(arms)};
}

std::string_view to_string(CaseTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_string(std::string_view text) {
  for (const auto& [t, name] : kTagNames) {
    if (name == text) return t;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> expected_pair(CaseTag tag, std::size_t k) {
  switch (tag) {
    case CaseTag::c2a:
    case CaseTag::c3a:
    case CaseTag::cka: return std::pair{0, 1};
    case CaseTag::c2b1:
    case CaseTag::c2b2:
    case CaseTag::c3b: return std::pair{1, 2};
    case CaseTag::c3c: return std::pair{1, 3};
    case CaseTag::c2c:
    case CaseTag::c3d: return std::pair{2, 3};
    case CaseTag::c3e: return std::pair{2, 4};
    case CaseTag::c2d: return std::pair{3, 4};
    case CaseTag::c3f1:
    case CaseTag::c3f2: return std::pair{3, 5};
    case CaseTag::c3g1:
    case CaseTag::c3g2: return std::pair{4, 6};
    case CaseTag::ckb: return std::pair{1, static_cast<int>(k)};
    case CaseTag::inadmissible: return std::nullopt;
  }
  return std::nullopt;
}

void validate_attachment(const Graph& h, const AttachSpec& spec) {
  const std::size_t n = spec.anchors.size();
  switch (spec.kind) {
    case AttachKind::HPath:
      if (n != 2 || spec.arms.size() != 1) {
        throw PreconditionError("an H-path needs 2 anchors and 1 length");
      }
      break;
    case AttachKind::HYGraph:
      if (n != 3 || spec.arms.size() != 3) {
        throw PreconditionError("an H-Y-graph needs 3 anchors and 3 arm lengths");
      }
      break;
    case AttachKind::KStar:
      if (n < 3 || spec.arms.size() != n) {
        throw PreconditionError("a k-star needs k >= 3 anchors and one arm length per anchor");
      }
      break;
  }
  std::set<VertexId> seen;
  for (VertexId a : spec.anchors) {
    if (!h.has_vertex(a)) throw PreconditionError("anchor " + id_str(a) + " is not in the host");
    if (!seen.insert(a).second) throw PreconditionError("anchor " + id_str(a) + " repeated");
  }
  for (std::size_t len : spec.arms) {
    if (len == 0) throw PreconditionError("arm lengths must be at least 1");
  }
  if (spec.kind == AttachKind::HPath && spec.arms[0] == 1 &&
      h.has_edge(spec.anchors[0], spec.anchors[1])) {
    throw PreconditionError("length-1 H-path " + id_str(spec.anchors[0]) + "-" +
                            id_str(spec.anchors[1]) + " duplicates an existing edge");
  }
}

AttachmentLayout attachment_layout(const Graph& h, const AttachSpec& spec) {
  validate_attachment(h, spec);
  AttachmentLayout layout;
  VertexId next = h.next_id();
  if (spec.kind == AttachKind::HPath) {
    std::vector<VertexId> inner;
    for (std::size_t i = 1; i < spec.arms[0]; ++i) inner.push_back(next++);
    layout.arm_vertices.push_back(std::move(inner));
    return layout;
  }
  layout.hub = next++;
  for (std::size_t len : spec.arms) {
    std::vector<VertexId> inner;
    for (std::size_t i = 1; i < len; ++i) inner.push_back(next++);
    layout.arm_vertices.push_back(std::move(inner));
  }
  return layout;
}

Graph apply_attachment(const Graph& h, const AttachSpec& spec) {
  const AttachmentLayout layout = attachment_layout(h, spec);
  Graph out = h;
  auto chain = [&out](VertexId from, const std::vector<VertexId>& inner, VertexId to) {
    VertexId prev = from;
    for (VertexId v : inner) {
      out.add_edge(prev, v);
      prev = v;
    }
    out.add_edge(prev, to);
  };
  if (spec.kind == AttachKind::HPath) {
    chain(spec.anchors[0], layout.arm_vertices[0], spec.anchors[1]);
  } else {
    for (std::size_t i = 0; i < spec.anchors.size(); ++i) {
      chain(*layout.hub, layout.arm_vertices[i], spec.anchors[i]);
    }
  }
  return out;
}

std::vector<AnchorPlacement> place_anchors(const Graph& h, const std::vector<VertexId>& anchors) {
  const std::set<VertexId> keep(anchors.begin(), anchors.end());
  const CoreCertificate cert = core_preferring(h, keep);
  const auto carriers = cert.carrier_edges();
  std::vector<AnchorPlacement> out;
  for (VertexId a : anchors) {
    AnchorPlacement p;
    p.anchor = a;
    p.in_core = cert.core().has_vertex(a);
    if (!p.in_core) p.carrier = carriers.at(a);
    out.push_back(p);
  }
  return out;
}

CaseTag profile_tag(const Graph& h, const AttachSpec& spec, std::size_t k) {
  validate_attachment(h, spec);
  require_level(h, k);
  if (k == 2 && spec.kind != AttachKind::HPath) {
    throw PreconditionError("the 2-connected taxonomy covers H-paths only");
  }
  if (k == 3 && spec.kind == AttachKind::KStar && spec.arity() != 3) {
    throw PreconditionError("the 3-connected taxonomy covers H-paths and H-Y-graphs only");
  }
  if (k >= 4 && spec.kind == AttachKind::KStar && spec.arity() > k) {
    throw PreconditionError("k-star arity exceeds the connectivity level");
  }

  const std::set<VertexId> keep(spec.anchors.begin(), spec.anchors.end());
  const CoreCertificate cert = core_preferring(h, keep);
  const auto places = place_anchors(h, spec.anchors);

  if (spec.kind == AttachKind::HPath) {
    const PairProfile profile = pair_profile(cert.core(), places[0], places[1]);
    if (k == 2) return path_tag_level2(profile);
    if (k == 3) return path_tag_level3(profile);
    return profile == PairProfile::CoreNonAdjacent ? CaseTag::cka : CaseTag::inadmissible;
  }
  if (k == 3) return y_tag_level3(places);
  // Level >= 4: a star of smaller arity leaves its hub below k, and any
  // suppressed anchor becomes a degree-3 core vertex.
  if (spec.arity() < k) return CaseTag::inadmissible;
  const bool all_core =
      std::all_of(places.begin(), places.end(), [](const AnchorPlacement& p) { return p.in_core; });
  return all_core ? CaseTag::ckb : CaseTag::inadmissible;
}

OpClass classify(const Graph& h, const AttachSpec& spec, std::size_t k) {
  OpClass out;
  out.level = k;
  out.tag = profile_tag(h, spec, k);
  const Graph before = core(h).core();
  const Graph after = core(apply_attachment(h, spec)).core();
  out.lambda = static_cast<int>(after.num_vertices()) - static_cast<int>(before.num_vertices());
  out.mu = static_cast<int>(after.num_edges()) - static_cast<int>(before.num_edges());
  return out;
}

OpClass classify(const Graph& h, const AttachSpec& spec) {
  validate_attachment(h, spec);
  return classify(h, spec, auto_level(h, spec));
}

bool is_2_admissible(const Graph& h, const AttachSpec& spec) {
  if (spec.kind != AttachKind::HPath) {
    throw PreconditionError("2-admissibility is defined for H-paths");
  }
  return profile_tag(h, spec, 2) != CaseTag::inadmissible;
}

bool is_3_admissible(const Graph& h, const AttachSpec& spec) {
  return profile_tag(h, spec, 3) != CaseTag::inadmissible;
}

bool is_k_admissible(const Graph& h, const AttachSpec& spec, std::size_t k) {
  if (k < 4) throw PreconditionError("k-admissibility is defined for k >= 4");
  if (spec.kind == AttachKind::HYGraph ||
      (spec.kind == AttachKind::KStar && spec.arity() != k)) {
    throw PreconditionError("k-admissibility takes an H-path or an H-" + std::to_string(k) +
                            "-star");
  }
  return profile_tag(h, spec, k) != CaseTag::inadmissible;
}

}  // namespace conncraft
