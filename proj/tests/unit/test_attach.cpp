#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "conncraft/attach.hpp"
#include "conncraft/connectivity.hpp"
#include "conncraft/error.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/named_graphs.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace conncraft;

namespace {

// K4 on 0..3 with every edge subdivided twice, interiors listed from the
// smaller end: 01 -> 4,5  02 -> 6,7  03 -> 8,9  12 -> 10,11  13 -> 12,13
// 23 -> 14,15.
Graph subdivided_k4() {
  Graph g;
  VertexId next = 4;
  for (const Edge& e : named::complete(4).edges()) {
    g.add_edge(e.u, next);
    g.add_edge(next, next + 1);
    g.add_edge(next + 1, e.v);
    next += 2;
  }
  return g;
}

// Diamond (0 and 1 non-adjacent) with edges subdivided in the given order.
Graph diamond_with(std::initializer_list<std::tuple<VertexId, VertexId, VertexId>> steps) {
  Graph g = named::diamond();
  for (const auto& [a, c, fresh] : steps) g = series_expand(g, a, c, fresh);
  return g;
}

void expect_class(const Graph& h, const AttachSpec& spec, std::size_t k, CaseTag tag) {
  const OpClass c = classify(h, spec, k);
  EXPECT_EQ(c.tag, tag) << to_string(c.tag);
  if (tag != CaseTag::inadmissible) {
    const auto pair = expected_pair(tag, k);
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ(std::make_pair(c.lambda, c.mu), *pair) << to_string(tag);
  }
}

}  // namespace

TEST(ApplyAttachment, Figure3Steps) {
  const Graph g0 = corpus::fixture("figure3_G0.el");
  const Graph g1 = apply_attachment(g0, AttachSpec::path(4, 0));
  EXPECT_EQ(g1, corpus::fixture("figure3_G1.el"));
  const Graph g2 = apply_attachment(g1, AttachSpec::y_graph(3, 4, 2, {1, 1, 2}));
  EXPECT_EQ(g2, corpus::fixture("figure3_G2.el"));
  EXPECT_EQ(apply_attachment(g2, AttachSpec::path(4, 6)), corpus::fixture("figure3_G.el"));
}

TEST(ApplyAttachment, DiamondPlusMissingEdge) {
  EXPECT_EQ(apply_attachment(named::diamond(), AttachSpec::path(0, 1)), named::complete(4));
}

TEST(ApplyAttachment, LayoutIds) {
  const Graph k4 = named::complete(4);
  const AttachSpec y = AttachSpec::y_graph(0, 1, 2, {2, 1, 3});
  const AttachmentLayout layout = attachment_layout(k4, y);
  ASSERT_TRUE(layout.hub.has_value());
  EXPECT_EQ(*layout.hub, 4u);
  EXPECT_EQ(layout.arm_vertices,
            (std::vector<std::vector<VertexId>>{{5}, {}, {6, 7}}));
  const Graph g = apply_attachment(k4, y);
  EXPECT_TRUE(g.has_edge(4, 5) && g.has_edge(5, 0) && g.has_edge(4, 1));
  EXPECT_TRUE(g.has_edge(4, 6) && g.has_edge(6, 7) && g.has_edge(7, 2));

  const AttachmentLayout p = attachment_layout(k4, AttachSpec::path(3, 1, 3));
  EXPECT_FALSE(p.hub.has_value());
  EXPECT_EQ(p.arm_vertices, (std::vector<std::vector<VertexId>>{{4, 5}}));
  const Graph q = apply_attachment(k4, AttachSpec::path(3, 1, 3));
  EXPECT_TRUE(q.has_edge(3, 4) && q.has_edge(4, 5) && q.has_edge(5, 1));
}

TEST(ApplyAttachment, Errors) {
  const Graph k4 = named::complete(4);
  EXPECT_THROW(apply_attachment(k4, AttachSpec::path(0, 9, 2)), PreconditionError);
  EXPECT_THROW(apply_attachment(k4, AttachSpec::path(1, 1, 2)), PreconditionError);
  EXPECT_THROW(apply_attachment(k4, AttachSpec::path(0, 1, 0)), PreconditionError);
  EXPECT_THROW(apply_attachment(k4, AttachSpec::path(0, 1, 1)), PreconditionError);
  EXPECT_THROW(apply_attachment(k4, AttachSpec::y_graph(0, 1, 1)), PreconditionError);
  EXPECT_THROW(apply_attachment(k4, (AttachSpec{AttachKind::HYGraph, {0, 1}, {1, 1}})),
               PreconditionError);
  EXPECT_THROW(apply_attachment(k4, (AttachSpec{AttachKind::KStar, {0, 1, 2}, {1, 1}})),
               PreconditionError);
}

TEST(CaseTag, StringRoundTrip) {
  for (CaseTag t : {CaseTag::c2a, CaseTag::c2b1, CaseTag::c2b2, CaseTag::c2c, CaseTag::c2d,
                    CaseTag::c3a, CaseTag::c3b, CaseTag::c3c, CaseTag::c3d, CaseTag::c3e,
                    CaseTag::c3f1, CaseTag::c3f2, CaseTag::c3g1, CaseTag::c3g2, CaseTag::cka,
                    CaseTag::ckb, CaseTag::inadmissible}) {
    EXPECT_EQ(case_tag_from_string(to_string(t)), t);
  }
  EXPECT_FALSE(case_tag_from_string("3h").has_value());
  EXPECT_EQ(expected_pair(CaseTag::ckb, 6), std::make_pair(1, 6));
  EXPECT_FALSE(expected_pair(CaseTag::inadmissible, 3).has_value());
}

TEST(Classify, SpecExamples) {
  const OpClass a = classify(named::diamond(), AttachSpec::path(0, 1));
  EXPECT_EQ(a.tag, CaseTag::c2a);
  EXPECT_EQ(std::make_pair(a.lambda, a.mu), std::make_pair(0, 1));

  const OpClass b = classify(named::cycle(4), AttachSpec::path(0, 2));
  EXPECT_EQ(b.tag, CaseTag::c2b2);
  EXPECT_EQ(std::make_pair(b.lambda, b.mu), std::make_pair(1, 2));

  const OpClass c = classify(corpus::fixture("figure3_G0.el"), AttachSpec::path(4, 0));
  EXPECT_EQ(c.tag, CaseTag::c3b);
  EXPECT_EQ(std::make_pair(c.lambda, c.mu), std::make_pair(1, 2));

  const OpClass d = classify(named::complete(4), AttachSpec::y_graph(0, 1, 2));
  EXPECT_EQ(d.tag, CaseTag::c3c);
  EXPECT_EQ(std::make_pair(d.lambda, d.mu), std::make_pair(1, 3));
}

TEST(Classify, TwoConnectedCases) {
  expect_class(named::diamond(), AttachSpec::path(0, 1), 2, CaseTag::c2a);
  expect_class(named::cycle(6), AttachSpec::path(0, 3), 2, CaseTag::c2b2);
  expect_class(named::cycle(6), AttachSpec::path(0, 1, 2), 2, CaseTag::c2b2);
  // Anchor-preferring cores keep both anchors of a symmetric host, so the
  // nC cases need a host whose subdivisions cannot be swapped for anchors.
  const Graph one = series_expand(named::complete(4), 0, 1, 4);
  expect_class(one, AttachSpec::path(4, 2), 2, CaseTag::c2b1);
  // Core anchor on the end of the other anchor's carrier edge.
  expect_class(one, AttachSpec::path(4, 0, 2), 2, CaseTag::c2c);
  const Graph apart = series_expand(one, 2, 3, 5);
  expect_class(apart, AttachSpec::path(4, 5), 2, CaseTag::c2c);
  const Graph shared = series_expand(one, 4, 1, 5);
  expect_class(shared, AttachSpec::path(4, 5, 2), 2, CaseTag::c2d);
  // In a symmetric host the anchors are taken as core vertices.
  expect_class(diamond_with({{2, 3, 4}}), AttachSpec::path(0, 4), 2, CaseTag::c2a);
}

TEST(Classify, ThreeConnectedCases) {
  const Graph h = subdivided_k4();
  expect_class(named::prism(), AttachSpec::path(0, 4), 3, CaseTag::c3a);
  expect_class(named::complete(4), AttachSpec::path(0, 1, 2), 3, CaseTag::inadmissible);
  expect_class(h, AttachSpec::path(0, 14), 3, CaseTag::c3b);
  expect_class(h, AttachSpec::path(0, 4, 2), 3, CaseTag::inadmissible);
  expect_class(h, AttachSpec::path(4, 14), 3, CaseTag::c3d);
  expect_class(h, AttachSpec::path(4, 5, 2), 3, CaseTag::inadmissible);
  expect_class(h, AttachSpec::y_graph(0, 1, 2), 3, CaseTag::c3c);
  expect_class(h, AttachSpec::y_graph(0, 1, 14), 3, CaseTag::c3e);
  expect_class(h, AttachSpec::y_graph(2, 3, 14), 3, CaseTag::inadmissible);
  expect_class(h, AttachSpec::y_graph(0, 14, 15), 3, CaseTag::c3f1);
  expect_class(h, AttachSpec::y_graph(2, 14, 15), 3, CaseTag::inadmissible);
  expect_class(h, AttachSpec::y_graph(0, 10, 14), 3, CaseTag::c3f2);
  expect_class(h, AttachSpec::y_graph(4, 5, 6), 3, CaseTag::c3g1);
  expect_class(h, AttachSpec::y_graph(4, 6, 14), 3, CaseTag::c3g2);
  const Graph three_on_one = series_expand(h, 4, 5, 16);
  expect_class(three_on_one, AttachSpec::y_graph(4, 16, 5), 3, CaseTag::inadmissible);
}

TEST(Classify, KConnectedCases) {
  expect_class(named::k222(), AttachSpec::path(0, 1), 4, CaseTag::cka);
  expect_class(named::complete(5), AttachSpec::star({0, 1, 2, 3}), 4, CaseTag::ckb);
  expect_class(named::complete(5), AttachSpec::star({0, 1, 2, 3}, {2, 1, 3, 1}), 4,
               CaseTag::ckb);
  expect_class(named::complete(5), AttachSpec::y_graph(0, 1, 2), 4, CaseTag::inadmissible);
  expect_class(named::complete(5), AttachSpec::path(0, 1, 2), 4, CaseTag::inadmissible);
  const Graph sub = series_expand(named::complete(5), 0, 1, 5);
  expect_class(sub, AttachSpec::path(5, 3), 4, CaseTag::inadmissible);
  EXPECT_THROW(classify(named::complete(6), AttachSpec::star({0, 1, 2, 3, 4}), 4),
               PreconditionError);
  expect_class(named::complete(6), AttachSpec::star({0, 1, 2, 3, 4}), 5, CaseTag::ckb);
}

TEST(Classify, AutoLevel) {
  EXPECT_EQ(classify(named::cycle(5), AttachSpec::path(0, 2)).level, 2u);
  EXPECT_EQ(classify(named::complete(4), AttachSpec::y_graph(0, 1, 2)).level, 3u);
  EXPECT_EQ(classify(named::complete(5), AttachSpec::path(0, 1, 2)).level, 3u);
  EXPECT_EQ(classify(named::complete(5), AttachSpec::star({0, 1, 2, 3})).level, 4u);
}

TEST(Admissible, TwoConnected) {
  EXPECT_TRUE(is_2_admissible(named::cycle(4), AttachSpec::path(0, 2)));
  EXPECT_THROW(is_2_admissible(named::cycle(4), AttachSpec::path(0, 0, 2)), PreconditionError);
  EXPECT_THROW(is_2_admissible(named::path(4), AttachSpec::path(0, 3)), PreconditionError);
  EXPECT_THROW(is_2_admissible(named::cycle(4), AttachSpec::y_graph(0, 1, 2)), PreconditionError);
}

TEST(Admissible, Figure3YGraphOntoG1) {
  const Graph g1 = corpus::fixture("figure3_G1.el");
  const AttachSpec y = AttachSpec::y_graph(3, 4, 2, {1, 1, 2});
  EXPECT_TRUE(is_3_admissible(g1, y));
  const Graph g2 = apply_attachment(g1, y);
  EXPECT_EQ(oracle::connectivity(g2), 2u);
  EXPECT_EQ(oracle::connectivity(core(g2).core()), 3u);
}

TEST(Admissible, ThreeConnectedNegative) {
  const Graph h = subdivided_k4();
  EXPECT_FALSE(is_3_admissible(h, AttachSpec::path(4, 5, 2)));
  const Graph three_on_one = series_expand(h, 4, 5, 16);
  EXPECT_FALSE(is_3_admissible(three_on_one, AttachSpec::y_graph(4, 16, 5)));
  EXPECT_THROW(is_3_admissible(named::cycle(5), AttachSpec::path(0, 2)), PreconditionError);
}

TEST(Admissible, KConnected) {
  EXPECT_TRUE(is_k_admissible(named::k222(), AttachSpec::path(0, 1), 4));
  const Graph s = apply_attachment(named::complete(5), AttachSpec::star({0, 1, 2, 3}));
  EXPECT_TRUE(is_k_admissible(named::complete(5), AttachSpec::star({0, 1, 2, 3}), 4));
  EXPECT_EQ(core(s).core().num_vertices(), 6u);
  EXPECT_EQ(oracle::connectivity(core(s).core()), 4u);
  const Graph sub = series_expand(named::complete(5), 0, 1, 5);
  EXPECT_FALSE(is_k_admissible(sub, AttachSpec::path(5, 2), 4));
  EXPECT_THROW(is_k_admissible(named::complete(4), AttachSpec::path(0, 1, 2), 4),
               PreconditionError);
  EXPECT_THROW(is_k_admissible(named::complete(5), AttachSpec::y_graph(0, 1, 2), 4),
               PreconditionError);
}

TEST(PlaceAnchors, CarrierEdges) {
  const auto places = place_anchors(subdivided_k4(), {0, 5, 15});
  ASSERT_EQ(places.size(), 3u);
  EXPECT_TRUE(places[0].in_core);
  EXPECT_FALSE(places[1].in_core);
  EXPECT_EQ(places[1].carrier, Edge(0, 1));
  EXPECT_EQ(places[2].carrier, Edge(2, 3));
}

// Profile-only admissibility must agree with a flow computation on the
// resulting core, and admissible tags must predict the measured growth.
TEST(Property, TwoConnectedHostsAlwaysAdmissible) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    const Graph h = replay(generate(rng(), 2, rng() % 5));
    const auto vs = h.vertices();
    const VertexId a = vs[rng() % vs.size()];
    VertexId b = vs[rng() % vs.size()];
    while (b == a) b = vs[rng() % vs.size()];
    std::size_t len = 1 + rng() % 3;
    if (len == 1 && h.has_edge(a, b)) len = 2;
    const AttachSpec spec = AttachSpec::path(a, b, len);
    const OpClass c = classify(h, spec, 2);
    ASSERT_TRUE(c.admissible());
    EXPECT_EQ(std::make_pair(c.lambda, c.mu), *expected_pair(c.tag, 2)) << to_string(c.tag);
    EXPECT_GE(vertex_connectivity(apply_attachment(h, spec)), 2u);
  }
}

TEST(Property, ThreeConnectedProfileMatchesFlow) {
  std::mt19937_64 rng(22);
  std::set<CaseTag> seen;
  for (int trial = 0; trial < 800; ++trial) {
    const Graph h = replay(generate(rng(), 3, rng() % 4));
    const auto vs = h.vertices();
    std::vector<VertexId> pick = vs;
    std::shuffle(pick.begin(), pick.end(), rng);
    AttachSpec spec;
    if (rng() % 2 == 0) {
      std::size_t len = 1 + rng() % 3;
      if (len == 1 && h.has_edge(pick[0], pick[1])) len = 2;
      spec = AttachSpec::path(pick[0], pick[1], len);
    } else {
      spec = AttachSpec::y_graph(pick[0], pick[1], pick[2],
                                 {1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3});
    }
    const OpClass c = classify(h, spec, 3);
    const bool flow = is_k_connected(core(apply_attachment(h, spec)).core(), 3);
    EXPECT_EQ(c.admissible(), flow) << to_string(c.tag);
    if (c.admissible()) {
      EXPECT_EQ(std::make_pair(c.lambda, c.mu), *expected_pair(c.tag, 3)) << to_string(c.tag);
    }
    seen.insert(c.tag);
  }
  EXPECT_GE(seen.size(), 8u);
}

TEST(Property, FourConnectedProfileMatchesFlow) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = replay(generate(rng(), 4, rng() % 3));
    std::vector<VertexId> pick = h.vertices();
    std::shuffle(pick.begin(), pick.end(), rng);
    AttachSpec spec;
    if (rng() % 2 == 0) {
      std::size_t len = 1 + rng() % 2;
      if (len == 1 && h.has_edge(pick[0], pick[1])) len = 2;
      spec = AttachSpec::path(pick[0], pick[1], len);
    } else {
      spec = AttachSpec::star({pick[0], pick[1], pick[2], pick[3]});
    }
    const OpClass c = classify(h, spec, 4);
    const bool flow = is_k_connected(core(apply_attachment(h, spec)).core(), 4);
    EXPECT_EQ(c.admissible(), flow) << to_string(c.tag);
  }
}
