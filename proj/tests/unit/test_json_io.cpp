#include <gtest/gtest.h>

#include "conncraft/error.hpp"
#include "conncraft/json_io.hpp"
#include "conncraft/named_graphs.hpp"
#include "conncraft/series.hpp"
#include "corpus.hpp"

using namespace conncraft;

TEST(JsonIo, GraphRoundTrip) {
  for (const auto& e : corpus::named()) {
    EXPECT_EQ(json::graph_from_json(json::graph_to_json(e.graph)), e.graph) << e.name;
  }
  EXPECT_EQ(json::graph_to_json(named::complete(3)), R"({"edges":[[0,1],[0,2],[1,2]],"n":3})");
}

TEST(JsonIo, SpecRoundTrip) {
  for (const AttachSpec& s : {AttachSpec::path(0, 3, 2), AttachSpec::y_graph(1, 2, 3, {1, 2, 3}),
                              AttachSpec::star({0, 1, 2, 3})}) {
    EXPECT_EQ(json::spec_from_json(json::spec_to_json(s)), s);
  }
}

TEST(JsonIo, TraceRoundTrip) {
  for (std::size_t k : {2, 3, 4}) {
    const ConstructionTrace t = generate(12, k, 6);
    EXPECT_EQ(json::trace_from_json(json::trace_to_json(t)), t);
    EXPECT_EQ(json::trace_from_json(json::trace_to_json(t, -1)), t);
  }
}

TEST(JsonIo, Figure3Fixture) {
  const std::string path = std::string(CONNCRAFT_FIXTURE_DIR) + "/figure3_trace.json";
  const ConstructionTrace t = json::read_trace(path);
  EXPECT_EQ(t.k, 3u);
  EXPECT_FALSE(t.rng_seed.has_value());
  EXPECT_EQ(replay(t), corpus::fixture("figure3_G.el"));
}

TEST(JsonIo, LogFormat) {
  const CoreCertificate cert = core(named::path(3));
  EXPECT_EQ(json::log_to_json(cert.log()), R"([{"left":0,"removed":1,"right":2}])");
}

TEST(JsonIo, Errors) {
  EXPECT_THROW(json::trace_from_json("{"), ParseError);
  EXPECT_THROW(json::trace_from_json(R"({"k":3,"steps":[]})"), ParseError);
  EXPECT_THROW(json::graph_from_json(R"({"n":2,"edges":[[0,0]]})"), ParseError);
  EXPECT_THROW(json::graph_from_json(R"({"n":2,"edges":[[0,1],[1,0]]})"), ParseError);
  EXPECT_THROW(json::graph_from_json(R"({"n":1,"edges":[[0,1]]})"), ParseError);
  EXPECT_THROW(json::graph_from_json(R"({"n":2,"edges":[[0,-1]]})"), ParseError);
  EXPECT_THROW(json::spec_from_json(R"({"kind":"loop","anchors":[0,1],"arms":[1]})"), ParseError);
  EXPECT_THROW(json::spec_from_json(R"({"kind":"hpath","anchors":"x","arms":[1]})"), ParseError);
  try {
    json::trace_from_json("{\n\"k\": 3,\n oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
