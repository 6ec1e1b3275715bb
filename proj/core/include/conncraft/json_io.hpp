#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "conncraft/attach.hpp"
#include "conncraft/graph.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"

// JSON forms. Keys are emitted in sorted order, so equal inputs give
// byte-identical text.
//
//   graph  {"n": 4, "edges": [[0, 1], ...]}
//   spec   {"kind": "hpath" | "hy" | "kstar", "anchors": [...], "arms": [...]}
//   trace  {"k": 3, "seed": graph, "rng_seed": 42, "steps": [spec, ...]}
//
// Malformed input raises ParseError.
namespace conncraft::json {

std::string graph_to_json(const Graph& g, int indent = -1);
Graph graph_from_json(std::string_view text);

std::string spec_to_json(const AttachSpec& spec, int indent = -1);
AttachSpec spec_from_json(std::string_view text);

std::string trace_to_json(const ConstructionTrace& trace, int indent = 2);
ConstructionTrace trace_from_json(std::string_view text);

std::string log_to_json(const std::vector<ContractionRecord>& log, int indent = -1);

ConstructionTrace read_trace(const std::filesystem::path& path);
void write_trace(const std::filesystem::path& path, const ConstructionTrace& trace);

}  // namespace conncraft::json
