#include "conncraft_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "conncraft/attach.hpp"
#include "conncraft/connectivity.hpp"
#include "conncraft/decomp.hpp"
#include "conncraft/edge_list.hpp"
#include "conncraft/error.hpp"
#include "conncraft/isomorphism.hpp"
#include "conncraft/json_io.hpp"
#include "conncraft/series.hpp"
#include "conncraft/synth.hpp"

namespace conncraft::cli {
namespace {

using nlohmann::json;
namespace io = conncraft::json;

// Input failures that should map to exit code 2, tagged with the file.
struct InputError : Error {
  using Error::Error;
};

Graph load_graph(const std::string& path) {
  try {
    return read_edge_list(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

ConstructionTrace load_trace(const std::string& path) {
  try {
    return io::read_trace(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string dot(const Graph& g) {
  std::ostringstream s;
  s << "graph G {\n";
  for (VertexId v : g.vertices()) s << "  " << v << ";\n";
  for (const Edge& e : g.edges()) s << "  " << e.u << " -- " << e.v << ";\n";
  s << "}\n";
  return s.str();
}

std::optional<AttachKind> kind_from(const std::string& text) {
  if (text == "hpath") return AttachKind::HPath;
  if (text == "hy") return AttachKind::HYGraph;
  if (text == "kstar") return AttachKind::KStar;
  return std::nullopt;
}

json opclass_json(const OpClass& c) {
  return {{"lambda", c.lambda},
          {"mu", c.mu},
          {"tag", std::string(to_string(c.tag))},
          {"level", c.level},
          {"admissible", c.admissible()}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"conncraft: series-reduction cores and constructions of k-connected graphs",
                 "conncraft"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json_, "Machine-readable JSON output");

    std::function<int()> action;
    std::string a;
    std::string b;
    std::string output;
    std::size_t k = 0;
    std::size_t steps = 0;
    std::size_t max_steps = 3;
    std::optional<std::uint64_t> rng;
    GenerateOptions gen;
    std::string kind = "hpath";
    std::vector<VertexId> anchors;
    std::vector<std::size_t> arms;

    auto* core_cmd = app.add_subcommand("core", "Print the series-reduction core");
    core_cmd->add_option("graph", a, "Edge-list file")->required();
    core_cmd->add_option("-o,--output", output, "Write the core edge list here");
    core_cmd->callback([&] { action = [&] { return cmd_core(a, output); }; });

    auto* is_core_cmd = app.add_subcommand("is-core", "Exit 0 iff no vertex is contractible");
    is_core_cmd->add_option("graph", a, "Edge-list file")->required();
    is_core_cmd->callback([&] { action = [&] { return cmd_is_core(a); }; });

    auto* equiv_cmd = app.add_subcommand("equiv", "Exit 0 iff the two graphs have isomorphic cores");
    equiv_cmd->add_option("first", a, "Edge-list file")->required();
    equiv_cmd->add_option("second", b, "Edge-list file")->required();
    equiv_cmd->callback([&] { action = [&] { return cmd_equiv(a, b); }; });

    auto* conn_cmd = app.add_subcommand("connectivity", "Print the vertex connectivity");
    conn_cmd->add_option("graph", a, "Edge-list file")->required();
    conn_cmd->callback([&] { action = [&] { return cmd_connectivity(a); }; });

    auto* classify_cmd = app.add_subcommand("classify", "Classify one attachment onto a host");
    classify_cmd->add_option("host", a, "Edge-list file")->required();
    classify_cmd->add_option("--kind", kind, "hpath, hy or kstar")
        ->check(CLI::IsMember({"hpath", "hy", "kstar"}));
    classify_cmd->add_option("--anchors", anchors, "Comma-separated anchor ids")
        ->delimiter(',')
        ->required();
    classify_cmd->add_option("--arms", arms, "Comma-separated arm lengths (default all 1)")
        ->delimiter(',');
    classify_cmd->add_option("--k", k, "Taxonomy level (default: from the host core)");
    classify_cmd->callback(
        [&] { action = [&] { return cmd_classify(a, kind, anchors, arms, k); }; });

    auto* gen_cmd = app.add_subcommand("generate", "Random construction trace");
    gen_cmd->add_option("--k", k, "Connectivity level")->required()->check(CLI::Range(2, 64));
    gen_cmd->add_option("--steps", steps, "Number of attachment steps")->required();
    gen_cmd->add_option("--rng", rng, "RNG seed (falls back to CONNCRAFT_SEED)");
    gen_cmd->add_option("--arm-mean", gen.arm_mean, "Mean arm length")->check(CLI::Range(1.0, 16.0));
    gen_cmd->add_option("--arm-cap", gen.arm_cap, "Longest arm")->check(CLI::Range(1, 64));
    gen_cmd->add_option("-o,--output", output, "Trace JSON file");
    gen_cmd->callback([&] { action = [&] { return cmd_generate(k, steps, rng, gen, output); }; });

    auto* replay_cmd = app.add_subcommand("replay", "Replay a trace to an edge list");
    replay_cmd->add_option("trace", a, "Trace JSON file")->required();
    replay_cmd->add_option("-o,--output", output, "Edge-list file");
    replay_cmd->callback([&] { action = [&] { return cmd_replay(a, output); }; });

    auto* verify_cmd = app.add_subcommand("verify", "Check every step of a trace");
    verify_cmd->add_option("trace", a, "Trace JSON file")->required();
    verify_cmd->callback([&] { action = [&] { return cmd_verify(a); }; });

    auto* decomp_cmd = app.add_subcommand("decompose", "Construction trace for a given graph");
    decomp_cmd->add_option("graph", a, "Edge-list file")->required();
    decomp_cmd->add_option("--k", k, "2 (ears) or 3")->required()->check(CLI::IsMember({2, 3}));
    decomp_cmd->add_option("-o,--output", output, "Trace JSON file");
    decomp_cmd->callback([&] { action = [&] { return cmd_decompose(a, k, output); }; });

    auto* search_cmd = app.add_subcommand("search", "Bounded search for a construction");
    search_cmd->add_option("start", a, "Edge-list file")->required();
    search_cmd->add_option("target", b, "Edge-list file")->required();
    search_cmd->add_option("--k", k, "Connectivity level")->required()->check(CLI::Range(2, 64));
    search_cmd->add_option("--max-steps", max_steps, "Step bound");
    search_cmd->add_option("-o,--output", output, "Trace JSON file");
    search_cmd->callback([&] { action = [&] { return cmd_search(a, b, k, max_steps, output); }; });

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz DOT for an edge list or trace");
    bool from_trace = false;
    dot_cmd->add_option("input", a, "Edge-list file (or trace with --trace)")->required();
    dot_cmd->add_flag("--trace", from_trace, "Input is a trace; export its replay");
    dot_cmd->add_option("-o,--output", output, "DOT file");
    dot_cmd->callback([&] { action = [&] { return cmd_dot(a, from_trace, output); }; });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kBadInput;
    }

    try {
      return action();
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kBadInput;
    } catch (const PreconditionError& e) {
      err_ << "precondition violated: " << e.what() << "\n";
      return kPrecondition;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kBadInput;
    }
  }

 private:
  void print_json(const json& value) { out_ << value.dump(2) << "\n"; }

  int cmd_core(const std::string& path, const std::string& output) {
    const Graph g = load_graph(path);
    const CoreCertificate cert = core(g);
    if (!output.empty()) write_edge_list(output, cert.core());
    if (json_) {
      print_json({{"core", json::parse(io::graph_to_json(cert.core()))},
                  {"log", json::parse(io::log_to_json(cert.log()))}});
    } else if (output.empty()) {
      out_ << format_edge_list(cert.core());
    } else {
      out_ << "core: " << cert.core().num_vertices() << " vertices, " << cert.core().num_edges()
           << " edges\n";
    }
    return kOk;
  }

  int cmd_is_core(const std::string& path) {
    const Graph g = load_graph(path);
    const auto reducible = contractible_vertices(g);
    if (json_) {
      print_json({{"is_core", reducible.empty()}, {"contractible", reducible}});
    } else if (reducible.empty()) {
      out_ << "core\n";
    } else {
      out_ << "not a core (contractible: " << reducible.front() << ")\n";
    }
    return reducible.empty() ? kOk : kFalse;
  }

  int cmd_equiv(const std::string& path_g, const std::string& path_h) {
    const Graph cg = core(load_graph(path_g)).core();
    const Graph ch = core(load_graph(path_h)).core();
    const bool same = are_isomorphic(cg, ch).has_value();
    if (json_) {
      print_json({{"equivalent", same},
                  {"core_vertices", {cg.num_vertices(), ch.num_vertices()}}});
    } else if (same) {
      out_ << "equivalent (core: " << cg.num_vertices() << " vertices)\n";
    } else {
      out_ << "not equivalent (cores: " << cg.num_vertices() << " and " << ch.num_vertices()
           << " vertices)\n";
    }
    return same ? kOk : kFalse;
  }

  int cmd_connectivity(const std::string& path) {
    const std::size_t kappa = vertex_connectivity(load_graph(path));
    if (json_) {
      print_json({{"connectivity", kappa}});
    } else {
      out_ << kappa << "\n";
    }
    return kOk;
  }

  int cmd_classify(const std::string& path, const std::string& kind_text,
                   const std::vector<VertexId>& anchors, std::vector<std::size_t> arms,
                   std::size_t k) {
    const Graph h = load_graph(path);
    const AttachKind kind = *kind_from(kind_text);
    if (arms.empty()) arms.assign(kind == AttachKind::HPath ? 1 : anchors.size(), 1);
    const AttachSpec spec{kind, anchors, arms};
    const OpClass c = k == 0 ? classify(h, spec) : classify(h, spec, k);
    if (json_) {
      print_json(opclass_json(c));
    } else {
      out_ << "lambda=" << c.lambda << " mu=" << c.mu << " tag=" << to_string(c.tag)
           << (c.admissible() ? " admissible" : " inadmissible") << "\n";
    }
    return c.admissible() ? kOk : kFalse;
  }

  int cmd_generate(std::size_t k, std::size_t steps, std::optional<std::uint64_t> rng,
                   const GenerateOptions& options, const std::string& output) {
    if (!rng) {
      if (const char* env = std::getenv("CONNCRAFT_SEED")) {
        try {
          std::size_t used = 0;
          rng = std::stoull(env, &used);
          if (env[used] != '\0') throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
          throw InputError(std::string("CONNCRAFT_SEED is not an integer: ") + env);
        }
      }
    }
    if (!rng) throw InputError("generate needs --rng <int> or CONNCRAFT_SEED");
    const ConstructionTrace trace = generate(*rng, k, steps, options);
    emit(out_, io::trace_to_json(trace) + "\n", output);
    return kOk;
  }

  int cmd_replay(const std::string& path, const std::string& output) {
    const Graph g = replay(load_trace(path));
    if (json_) {
      print_json(json::parse(io::graph_to_json(g)));
      if (!output.empty()) write_edge_list(output, g);
      return kOk;
    }
    emit(out_, format_edge_list(g), output);
    return kOk;
  }

  int cmd_verify(const std::string& path) {
    const ConstructionTrace trace = load_trace(path);
    const VerifyReport report = verify(trace);
    if (json_) {
      json steps = json::array();
      for (const StepReport& s : report.steps) {
        steps.push_back({{"op", json::parse(io::spec_to_json(s.op))},
                         {"opclass", opclass_json(s.opclass)},
                         {"core_connectivity", s.core_connectivity},
                         {"graph_connectivity", s.graph_connectivity},
                         {"admissible", s.admissible}});
      }
      print_json({{"ok", report.ok},
                  {"seed_ok", report.seed_ok},
                  {"seed_core_connectivity", report.seed_core_connectivity},
                  {"steps", steps}});
    } else {
      out_ << "seed: " << (report.seed_ok ? "ok" : "invalid")
           << " (core connectivity " << report.seed_core_connectivity << ")\n";
      for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const StepReport& s = report.steps[i];
        out_ << "step " << i << ": " << to_string(s.op.kind) << " tag=" << to_string(s.opclass.tag)
             << " (" << s.opclass.lambda << "," << s.opclass.mu << ")"
             << " core_kappa=" << s.core_connectivity << " kappa=" << s.graph_connectivity
             << (s.admissible ? " admissible" : " inadmissible") << "\n";
      }
      out_ << (report.ok ? "verified" : "not verified") << "\n";
    }
    return report.ok ? kOk : kFalse;
  }

  int cmd_decompose(const std::string& path, std::size_t k, const std::string& output) {
    const Graph g = load_graph(path);
    const Decomposition d = k == 2 ? ear_decompose_2(g) : decompose_3(g);
    emit(out_, io::trace_to_json(d.trace) + "\n", output);
    return kOk;
  }

  int cmd_search(const std::string& start_path, const std::string& target_path, std::size_t k,
                 std::size_t max_steps, const std::string& output) {
    const Graph start = load_graph(start_path);
    const Graph target = load_graph(target_path);
    const auto trace = search_construction_exists(start, target, max_steps, k);
    if (!trace) {
      if (json_) {
        print_json({{"found", false}});
      } else {
        out_ << "no construction\n";
      }
      return kFalse;
    }
    if (!output.empty()) io::write_trace(output, *trace);
    if (json_) {
      print_json({{"found", true}, {"trace", json::parse(io::trace_to_json(*trace))}});
    } else if (output.empty()) {
      out_ << io::trace_to_json(*trace) << "\n";
    } else {
      out_ << "construction with " << trace->steps.size() << " steps\n";
    }
    return kOk;
  }

  int cmd_dot(const std::string& path, bool from_trace, const std::string& output) {
    const Graph g = from_trace ? replay(load_trace(path)) : load_graph(path);
    emit(out_, dot(g), output);
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace conncraft::cli
