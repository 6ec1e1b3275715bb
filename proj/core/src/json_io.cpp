#include "conncraft/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conncraft/edge_list.hpp"
#include "conncraft/error.hpp"

namespace conncraft::json {
namespace {

using nlohmann::json;

json graph_value(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

json spec_value(const AttachSpec& spec) {
  return {{"kind", std::string(to_string(spec.kind))},
          {"anchors", spec.anchors},
          {"arms", spec.arms}};
}

template <typename T>
T field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string(what) + " has a malformed \"" + key + "\"");
  }
}

Graph graph_of(const json& value) {
  const auto n = field<std::size_t>(value, "n", "graph");
  const auto pairs = field<std::vector<std::vector<std::int64_t>>>(value, "edges", "graph");
  std::vector<Edge> edges;
  for (const auto& p : pairs) {
    if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] > 0xffffffffLL || p[1] > 0xffffffffLL) {
      throw ParseError("graph edges must be pairs of non-negative ids");
    }
    if (p[0] == p[1]) throw ParseError("graph edge is a loop at " + std::to_string(p[0]));
    edges.emplace_back(static_cast<VertexId>(p[0]), static_cast<VertexId>(p[1]));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParseError("graph has a repeated edge");
  }
  return graph_from_edge_set(n, edges);
}

AttachSpec spec_of(const json& value) {
  const auto kind = field<std::string>(value, "kind", "attachment");
  AttachSpec spec;
  if (kind == "hpath") {
    spec.kind = AttachKind::HPath;
  } else if (kind == "hy") {
    spec.kind = AttachKind::HYGraph;
  } else if (kind == "kstar") {
    spec.kind = AttachKind::KStar;
  } else {
    throw ParseError("unknown attachment kind \"" + kind + "\"");
  }
  spec.anchors = field<std::vector<VertexId>>(value, "anchors", "attachment");
  spec.arms = field<std::vector<std::size_t>>(value, "arms", "attachment");
  return spec;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = static_cast<std::size_t>(
        std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n') + 1);
    throw ParseError("invalid JSON", line);
  }
}

}  // namespace

std::string graph_to_json(const Graph& g, int indent) { return graph_value(g).dump(indent); }

Graph graph_from_json(std::string_view text) { return graph_of(parse(text)); }

std::string spec_to_json(const AttachSpec& spec, int indent) {
  return spec_value(spec).dump(indent);
}

AttachSpec spec_from_json(std::string_view text) { return spec_of(parse(text)); }

std::string trace_to_json(const ConstructionTrace& trace, int indent) {
  json steps = json::array();
  for (const AttachSpec& s : trace.steps) steps.push_back(spec_value(s));
  json out = {{"k", trace.k}, {"seed", graph_value(trace.seed)}, {"steps", steps}};
  if (trace.rng_seed) out["rng_seed"] = *trace.rng_seed;
  if (indent < 0) return out.dump();
  // One line per step keeps long traces readable and diffable.
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string text = "{\n";
  text += pad + "\"k\": " + out["k"].dump() + ",\n";
  if (trace.rng_seed) text += pad + "\"rng_seed\": " + out["rng_seed"].dump() + ",\n";
  text += pad + "\"seed\": " + out["seed"].dump() + ",\n";
  text += pad + "\"steps\": [";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    text += (i == 0 ? "\n" : ",\n") + pad + pad + steps[i].dump();
  }
  text += steps.empty() ? "]\n}" : "\n" + pad + "]\n}";
  return text;
}

ConstructionTrace trace_from_json(std::string_view text) {
  const json value = parse(text);
  ConstructionTrace trace;
  trace.k = field<std::size_t>(value, "k", "trace");
  if (!value.contains("seed")) throw ParseError("trace is missing \"seed\"");
  trace.seed = graph_of(value.at("seed"));
  if (value.contains("rng_seed")) trace.rng_seed = field<std::uint64_t>(value, "rng_seed", "trace");
  const auto steps = field<std::vector<json>>(value, "steps", "trace");
  for (const json& s : steps) trace.steps.push_back(spec_of(s));
  return trace;
}

std::string log_to_json(const std::vector<ContractionRecord>& log, int indent) {
  json out = json::array();
  for (const ContractionRecord& r : log) {
    out.push_back({{"removed", r.removed}, {"left", r.left}, {"right", r.right}});
  }
  return out.dump(indent);
}

ConstructionTrace read_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return trace_from_json(buf.str());
}

void write_trace(const std::filesystem::path& path, const ConstructionTrace& trace) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << trace_to_json(trace) << '\n';
}

}  // namespace conncraft::json
