#pragma once

#include <vector>

#include "macrorl/analysis/explicit_model.hpp"

namespace macrorl::analysis {

struct SolveOptions {
  double tol = 1e-10;
  std::size_t max_sweeps = 1'000'000;
};

struct ValueSolution {
  std::vector<double> v;               // by state id; 0 for terminal/invalid
  std::vector<std::vector<double>> q;  // [state id][model action]
  std::vector<std::size_t> policy;     // greedy model action, lowest index on ties
  std::vector<double> sweep_deltas;    // max |V_{k+1} - V_k| per sweep
  std::size_t sweeps = 0;
};

/// Synchronous Bellman-optimality sweeps on a model with atomic actions only.
/// Throws if the model contains multi-step entries or does not converge.
ValueSolution value_iteration(const ExplicitModel& model, double gamma, SolveOptions opts = {});

/// Same sweeps with gamma^tau discounting of the successor value.
ValueSolution smdp_value_iteration(const ExplicitModel& model, double gamma, SolveOptions opts = {});

/// Undiscounted return of following the greedy policy from the start state
/// (capped at `max_steps` atomic steps).
double greedy_rollout_return(envs::EnumerableEnvironment& env, const ActionSet& set,
                             const ExplicitModel& model, const ValueSolution& sol, std::size_t max_steps);

}  // namespace macrorl::analysis
