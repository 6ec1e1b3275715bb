#include "conncraft/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "conncraft/error.hpp"

namespace conncraft {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

Graph graph_from_edge_set(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u));
    if (g.has_edge(e)) {
      throw ParseError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    g.add_edge(e.u, e.v);
  }
  if (g.num_vertices() > n) {
    throw ParseError("edges mention " + std::to_string(g.num_vertices()) +
                     " vertices but the header declares " + std::to_string(n));
  }
  for (VertexId v = 0; g.num_vertices() < n; ++v) g.add_vertex(v);
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw ParseError("expected two integers, got " + std::to_string(toks.size()) + " fields",
                       line_no);
    }
    const std::uint64_t a = parse_uint(toks[0], line_no);
    const std::uint64_t b = parse_uint(toks[1], line_no);
    if (!have_header) {
      have_header = true;
      n = a;
      m = b;
      header_line = line_no;
      continue;
    }
    if (a > std::numeric_limits<VertexId>::max() || b > std::numeric_limits<VertexId>::max()) {
      throw ParseError("vertex id out of range", line_no);
    }
    if (a == b) throw ParseError("loop at vertex " + std::to_string(a), line_no);
    const Edge e(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b), line_no);
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were listed",
                     header_line);
  }
  try {
    return graph_from_edge_set(n, edges);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), header_line);
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << format_edge_list(g);
}

}  // namespace conncraft
