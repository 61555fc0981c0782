#pragma once

#include <random>
#include <span>
#include <vector>

#include "macrorl/core/action_set.hpp"
#include "macrorl/envs/environment.hpp"

namespace macrorl::qlearn {

/// gamma^tau by repeated multiplication, so tau = 1 yields gamma exactly.
double discount_power(double gamma, std::size_t tau);

/// Bootstrapped semi-MDP target
///   reward_cum + gamma^tau * max over enabled next_q   (non-terminal)
///   reward_cum                                          (terminal)
/// `reward_cum` is the discounted in-decision reward sum. Throws if no output
/// of `next_enabled` is set.
double smdp_target(double reward_cum, std::size_t tau, double gamma, std::span<const double> next_q,
                   const std::vector<bool>& next_enabled, bool terminal);

/// Index of the largest enabled value; lowest index on ties.
OutputIndex masked_argmax(std::span<const double> q, const std::vector<bool>& enabled);

/// Epsilon-greedy over enabled outputs: with probability epsilon a uniform
/// enabled index, otherwise the masked argmax. Throws if nothing is enabled.
OutputIndex select_output(std::span<const double> q, const std::vector<bool>& enabled, double epsilon,
                          std::mt19937_64& rng);

struct ExecutionResult {
  double reward_cum = 0.0;      // sum of gamma^(k-1) r_k
  double reward_total = 0.0;    // undiscounted sum
  std::size_t tau = 0;
  Observation next;
  bool terminal = false;
  bool truncated = false;
  std::vector<ActionId> executed;  // atomic actions actually taken
};

/// Runs the atomic expansion of `idx` open-loop, stopping early only when the
/// episode ends mid-macro.
ExecutionResult execute_output(envs::Environment& env, const ActionSet& set, OutputIndex idx, double gamma);

}  // namespace macrorl::qlearn
