#include <gtest/gtest.h>

#include "conncraft/connectivity.hpp"
#include "conncraft/error.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/json_io.hpp"
#include "conncraft/named_graphs.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace conncraft;

namespace {

ConstructionTrace figure3_trace() {
  ConstructionTrace t;
  t.k = 3;
  t.seed = corpus::fixture("figure3_G0.el");
  t.steps = {AttachSpec::path(4, 0), AttachSpec::y_graph(3, 4, 2, {1, 1, 2}),
             AttachSpec::path(4, 6)};
  return t;
}

}  // namespace

TEST(Generate, Deterministic) {
  for (std::size_t k : {2, 3, 4, 5}) {
    const ConstructionTrace a = generate(99, k, 8);
    const ConstructionTrace b = generate(99, k, 8);
    EXPECT_EQ(a, b);
    EXPECT_EQ(json::trace_to_json(a), json::trace_to_json(b));
    EXPECT_EQ(a.rng_seed, 99u);
    EXPECT_EQ(a.steps.size(), 8u);
  }
  EXPECT_NE(generate(1, 3, 6), generate(2, 3, 6));
}

TEST(Generate, ZeroStepsGivesK4Class) {
  const ConstructionTrace t = generate(5, 3, 0);
  EXPECT_TRUE(t.steps.empty());
  EXPECT_EQ(replay(t), t.seed);
  EXPECT_TRUE(are_isomorphic(core(t.seed).core(), named::complete(4)).has_value());
}

TEST(Generate, TwoConnectedByOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = replay(generate(seed, 2, 5));
    if (g.num_vertices() <= 12) EXPECT_GE(oracle::connectivity(g), 2u) << seed;
    EXPECT_GE(vertex_connectivity(g), 2u) << seed;
  }
}

TEST(Generate, EveryPrefixHasThreeConnectedCore) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ConstructionTrace t = generate(seed, 3, 10);
    for (const Graph& g : replay_prefixes(t)) {
      EXPECT_TRUE(is_k_connected(core(g).core(), 3)) << seed;
    }
    EXPECT_TRUE(verify(t).ok) << seed;
  }
}

TEST(Generate, KFourAndFive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t k : {4, 5}) {
      const ConstructionTrace t = generate(seed, k, 5);
      EXPECT_TRUE(valid_seed(t.seed, k));
      EXPECT_TRUE(verify(t).ok) << seed << " k=" << k;
    }
  }
}

TEST(Generate, ArmCapOne) {
  GenerateOptions options;
  options.arm_cap = 1;
  const ConstructionTrace t = generate(4, 3, 10, options);
  for (const AttachSpec& s : t.steps) {
    for (std::size_t len : s.arms) EXPECT_EQ(len, 1u);
  }
}

TEST(Replay, Figure3) {
  EXPECT_EQ(replay(figure3_trace()), corpus::fixture("figure3_G.el"));
}

TEST(Replay, EmptyStepsIsSeed) {
  ConstructionTrace t;
  t.seed = named::complete(4);
  EXPECT_EQ(replay(t), t.seed);
}

TEST(Replay, UnknownAnchorNamesStep) {
  ConstructionTrace t = figure3_trace();
  t.steps.push_back(AttachSpec::path(1, 42));
  try {
    replay(t);
    FAIL() << "expected ReplayError";
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.step(), 3u);
  }
}

TEST(Verify, Figure3) {
  const VerifyReport r = verify(figure3_trace());
  EXPECT_TRUE(r.seed_ok);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_EQ(r.steps[0].opclass.tag, CaseTag::c3b);
  EXPECT_EQ(r.steps[1].opclass.tag, CaseTag::c3c);
  EXPECT_EQ(r.steps[2].opclass.tag, CaseTag::c3b);
  EXPECT_EQ(r.steps[0].graph_connectivity, 3u);
  // G2 itself is only 2-connected; its core is 3-connected.
  EXPECT_EQ(r.steps[1].graph_connectivity, 2u);
  EXPECT_EQ(r.steps[1].core_connectivity, 3u);
  const Graph g2 = replay_prefixes(figure3_trace())[2];
  EXPECT_EQ(oracle::connectivity(core(g2).core()), 3u);
}

TEST(Verify, FlagsPathOnOneCoreEdge) {
  ConstructionTrace t;
  t.k = 3;
  // K4 with edge 0-1 subdivided twice (4, 5).
  t.seed = series_expand(series_expand(named::complete(4), 0, 1, 4), 4, 1, 5);
  t.steps = {AttachSpec::path(4, 5, 2)};
  const VerifyReport r = verify(t);
  EXPECT_TRUE(r.seed_ok);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_FALSE(r.steps[0].admissible);
  EXPECT_LT(r.steps[0].core_connectivity, 3u);
  EXPECT_FALSE(r.ok);
}

TEST(Verify, InvalidSeed) {
  ConstructionTrace t;
  t.k = 3;
  t.seed = named::complete(5);
  EXPECT_FALSE(verify(t).seed_ok);
  t.k = 2;
  t.seed = named::complete(4);
  EXPECT_FALSE(verify(t).ok);
}

TEST(Verify, PrefixClosure) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ConstructionTrace t = generate(seed, 3, 6);
    while (!t.steps.empty()) {
      t.steps.pop_back();
      EXPECT_TRUE(verify(t).ok);
    }
  }
}

TEST(Search, K5CannotReachK222) {
  EXPECT_FALSE(search_construction_exists(named::complete(5), named::k222(), 3, 4).has_value());
}

TEST(Search, TrivialTarget) {
  const auto t = search_construction_exists(named::complete(4), named::complete(4), 0, 3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(t->steps.empty());
  EXPECT_EQ(t->seed, named::complete(4));
}

TEST(Search, K4ToPrism) {
  const auto t = search_construction_exists(named::complete(4), named::prism(), 4, 3);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(verify(*t).ok);
  EXPECT_TRUE(are_isomorphic(core(replay(*t)).core(), named::prism()).has_value());
}

TEST(Search, SeveralTargets) {
  for (const Graph& target : {named::wheel(4), named::wheel(5), named::complete(5),
                              named::complete_bipartite(3, 3), named::k222()}) {
    const auto t = search_construction_exists(named::complete(4), target, 4, 3);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(verify(*t).ok);
    EXPECT_TRUE(are_isomorphic(core(replay(*t)).core(), target).has_value());
  }
  const auto c = search_construction_exists(named::cycle(3), named::k222(), 10, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify(*c).ok);
  EXPECT_FALSE(search_construction_exists(named::complete(4), named::prism(), 0, 3).has_value());
}
