#include "conncraft/synth.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "conncraft/connectivity.hpp"
#include "conncraft/error.hpp"
#include "conncraft/named_graphs.hpp"
#include "conncraft/series.hpp"

namespace conncraft {
namespace {

// std::uniform_int_distribution and friends are implementation-defined, so
// traces would differ between standard libraries. Only raw engine output is
// portable; everything above it is done by hand.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) {
    const std::uint64_t span = n;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % span);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return index(2) == 1; }

  std::size_t arm(const GenerateOptions& options) {
    const double mean = std::max(1.0, options.arm_mean);
    const double carry_on = 1.0 - 1.0 / mean;
    const std::size_t cap = std::max<std::size_t>(1, options.arm_cap);
    std::size_t len = 1;
    while (len < cap && unit() < carry_on) ++len;
    return len;
  }

  std::vector<VertexId> choose(std::vector<VertexId> pool, std::size_t r) {
    for (std::size_t i = 0; i < r; ++i) {
      std::swap(pool[i], pool[i + index(pool.size() - i)]);
    }
    pool.resize(r);
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

Graph make_seed(Sampler& rng, std::size_t k) {
  if (k == 2) return named::cycle(3 + rng.index(3));
  if (k == 3) {
    Graph g = named::complete(4);
    const std::size_t subdivisions = rng.index(3);
    for (std::size_t i = 0; i < subdivisions; ++i) {
      const auto edges = g.edges();
      const Edge e = edges[rng.index(edges.size())];
      g = series_expand(g, e.u, e.v, g.next_id());
    }
    return g;
  }
  return named::complete(k + 1);
}

AttachSpec propose(Sampler& rng, const Graph& h, std::size_t k, const GenerateOptions& options) {
  const std::vector<VertexId> pool = h.vertices();
  const bool path = k == 2 || rng.coin();
  if (path || pool.size() < (k == 3 ? 3 : k)) {
    const auto anchors = rng.choose(pool, 2);
    return AttachSpec::path(anchors[0], anchors[1], rng.arm(options));
  }
  const std::size_t arity = k == 3 ? 3 : k;
  const auto anchors = rng.choose(pool, arity);
  std::vector<std::size_t> arms;
  for (std::size_t i = 0; i < arity; ++i) arms.push_back(rng.arm(options));
  AttachSpec spec{k == 3 ? AttachKind::HYGraph : AttachKind::KStar, anchors, arms};
  return spec;
}

bool acceptable(const Graph& h, const AttachSpec& spec, std::size_t k) {
  try {
    return profile_tag(h, spec, k) != CaseTag::inadmissible;
  } catch (const PreconditionError&) {
    return false;
  }
}

// Always admissible: a path of length 2 for k = 2, otherwise a Y or k-star
// whose anchors are all core vertices.
AttachSpec fallback(Sampler& rng, const Graph& h, std::size_t k, const GenerateOptions& options) {
  const std::vector<VertexId> pool = core(h).core().vertices();
  if (k == 2) {
    const auto anchors = rng.choose(pool, 2);
    return AttachSpec::path(anchors[0], anchors[1], 2);
  }
  const std::size_t arity = k == 3 ? 3 : k;
  const auto anchors = rng.choose(pool, arity);
  std::vector<std::size_t> arms;
  for (std::size_t i = 0; i < arity; ++i) arms.push_back(rng.arm(options));
  return AttachSpec{k == 3 ? AttachKind::HYGraph : AttachKind::KStar, anchors, arms};
}

std::size_t connectivity_or_zero(const Graph& g) {
  return g.num_vertices() < 2 ? 0 : vertex_connectivity(g);
}

}  // namespace

ConstructionTrace generate(std::uint64_t rng_seed, std::size_t k, std::size_t steps,
                           const GenerateOptions& options) {
  if (k < 2) throw PreconditionError("generate needs k >= 2");
  Sampler rng(rng_seed);
  ConstructionTrace trace;
  trace.k = k;
  trace.rng_seed = rng_seed;
  trace.seed = make_seed(rng, k);
  Graph current = trace.seed;
  for (std::size_t step = 0; step < steps; ++step) {
    std::optional<AttachSpec> chosen;
    for (std::size_t attempt = 0; attempt < options.max_attempts && !chosen; ++attempt) {
      AttachSpec spec = propose(rng, current, k, options);
      if (acceptable(current, spec, k)) chosen = std::move(spec);
    }
    if (!chosen) chosen = fallback(rng, current, k, options);
    current = apply_attachment(current, *chosen);
    trace.steps.push_back(std::move(*chosen));
  }
  return trace;
}

std::vector<Graph> replay_prefixes(const ConstructionTrace& trace) {
  std::vector<Graph> out{trace.seed};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      out.push_back(apply_attachment(out.back(), trace.steps[i]));
    } catch (const PreconditionError& e) {
      throw ReplayError(i, e.what());
    }
  }
  return out;
}

Graph replay(const ConstructionTrace& trace) {
  Graph current = trace.seed;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      current = apply_attachment(current, trace.steps[i]);
    } catch (const PreconditionError& e) {
      throw ReplayError(i, e.what());
    }
  }
  return current;
}

bool valid_seed(const Graph& seed, std::size_t k) {
  if (k == 2) return is_cycle(seed);
  if (seed.num_vertices() < 2 || !is_connected(seed)) return false;
  if (k == 3) {
    const Graph c = core(seed).core();
    return c.num_vertices() == 4 && c.is_complete();
  }
  return is_core(seed) && seed.num_vertices() > k && is_k_connected(seed, k);
}

VerifyReport verify(const ConstructionTrace& trace) {
  const std::size_t k = trace.k;
  if (k < 2) throw PreconditionError("trace level must be at least 2");
  const std::vector<Graph> prefixes = replay_prefixes(trace);

  VerifyReport report;
  report.seed_ok = valid_seed(trace.seed, k);
  Graph before_core;
  if (trace.seed.num_vertices() >= 2 && is_connected(trace.seed)) {
    before_core = core(trace.seed).core();
    report.seed_core_connectivity = connectivity_or_zero(before_core);
  }
  bool ok = report.seed_ok;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Graph& host = prefixes[i];
    const Graph& after = prefixes[i + 1];
    StepReport step;
    step.op = trace.steps[i];
    step.opclass.level = k;
    step.graph_connectivity = connectivity_or_zero(after);
    Graph after_core;
    if (after.num_vertices() >= 2 && is_connected(after)) {
      after_core = core(after).core();
      step.core_connectivity = connectivity_or_zero(after_core);
    }
    step.opclass.lambda =
        static_cast<int>(after_core.num_vertices()) - static_cast<int>(before_core.num_vertices());
    step.opclass.mu =
        static_cast<int>(after_core.num_edges()) - static_cast<int>(before_core.num_edges());
    try {
      step.opclass.tag = profile_tag(host, step.op, k);
    } catch (const PreconditionError&) {
      step.opclass.tag = CaseTag::inadmissible;
    }
    step.admissible = step.opclass.admissible();
    ok = ok && step.admissible && step.core_connectivity >= k &&
         (k != 2 || step.graph_connectivity >= 2);
    report.steps.push_back(std::move(step));
    before_core = std::move(after_core);
  }
  report.ok = ok;
  return report;
}

}  // namespace conncraft
