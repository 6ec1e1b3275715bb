#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conncraft/attach.hpp"
#include "conncraft/graph.hpp"

namespace conncraft {

/// A seed graph plus attachment steps for connectivity level `k`.
///
/// Seed conventions: k = 2 a cycle; k = 3 a graph whose core is K4;
/// k >= 4 a k-connected core graph.
struct ConstructionTrace {
  std::size_t k = 3;
  Graph seed;
  std::vector<AttachSpec> steps;
  std::optional<std::uint64_t> rng_seed;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

struct GenerateOptions {
  /// Mean of the geometric arm-length distribution (support starts at 1).
  double arm_mean = 1.5;
  std::size_t arm_cap = 4;
  /// Rejected proposals tolerated per step before falling back to a star
  /// on core vertices.
  std::size_t max_attempts = 200;
};

/// Random trace with `steps` admissible steps. Deterministic in `rng_seed`.
ConstructionTrace generate(std::uint64_t rng_seed, std::size_t k, std::size_t steps,
                           const GenerateOptions& options = {});

/// Folds apply_attachment over the steps. Throws ReplayError naming the
/// first invalid step.
Graph replay(const ConstructionTrace& trace);

/// Graph after each prefix: element i is the graph after i steps.
std::vector<Graph> replay_prefixes(const ConstructionTrace& trace);

struct StepReport {
  AttachSpec op;
  /// Measured core growth and profile tag. The tag is `inadmissible` when
  /// the host core was already below level k.
  OpClass opclass;
  /// Flow-based vertex connectivity of the core after the step.
  std::size_t core_connectivity = 0;
  /// Flow-based vertex connectivity of the graph after the step.
  std::size_t graph_connectivity = 0;
  bool admissible = false;
};

struct VerifyReport {
  bool seed_ok = false;
  std::size_t seed_core_connectivity = 0;
  std::vector<StepReport> steps;
  /// Seed valid, every step admissible, every intermediate core (and for
  /// k = 2 every intermediate graph) at least k-connected.
  bool ok = false;
};

VerifyReport verify(const ConstructionTrace& trace);

/// True when `seed` satisfies the seed convention for level k.
bool valid_seed(const Graph& seed, std::size_t k);

/// Breadth-first search over admissible attachments from `start` towards a
/// graph whose core is isomorphic to core(target), using at most
/// `max_steps` steps. States are cores up to isomorphism; states whose core
/// outgrows core(target) are pruned. Returns a replayable trace (its seed
/// is `start` with edges subdivided as far as the found steps need) or
/// nullopt when the bounded space is exhausted. Meant for targets of at
/// most about 8 vertices.
std::optional<ConstructionTrace> search_construction_exists(const Graph& start,
                                                            const Graph& target,
                                                            std::size_t max_steps,
                                                            std::size_t k);

}  // namespace conncraft
