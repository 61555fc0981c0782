#pragma once

#include <optional>
#include <vector>

#include "macrorl/core/action_set.hpp"
#include "macrorl/envs/environment.hpp"

namespace macrorl::analysis {

struct ModelEntry {
  StateId next = 0;
  double reward = 0.0;      // discounted in-decision sum
  std::size_t duration = 1; // tau
  bool terminal = false;
};

/// Deterministic SMDP model over the enabled outputs of an action set.
///
/// Built by rolling out every enabled output from every non-terminal state,
/// which is exact because the bundled environments are deterministic.
struct ExplicitModel {
  std::size_t state_count = 0;              // exclusive bound on ids
  std::vector<StateId> states;              // valid ids
  std::vector<bool> terminal;               // indexed by id
  std::vector<bool> valid;                  // indexed by id
  std::vector<OutputIndex> outputs;         // model action k -> output index
  std::vector<std::optional<ModelEntry>> entries;  // [s * outputs.size() + k]
  StateId start = 0;

  std::size_t action_count() const noexcept { return outputs.size(); }
  const ModelEntry& at(StateId s, std::size_t k) const;
  bool atomic_only() const;
};

/// Model over the atomic actions only.
ExplicitModel build_atomic_model(envs::EnumerableEnvironment& env, double gamma);

/// Model over every enabled output of `set` (atomics plus macros).
ExplicitModel build_model(envs::EnumerableEnvironment& env, const ActionSet& set, double gamma);

}  // namespace macrorl::analysis
