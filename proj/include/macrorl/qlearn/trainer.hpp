#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "macrorl/analysis/action_gap.hpp"
#include "macrorl/analysis/curves.hpp"
#include "macrorl/core/action_set.hpp"
#include "macrorl/core/transition.hpp"
#include "macrorl/envs/environment.hpp"
#include "macrorl/macros/constructors.hpp"
#include "macrorl/macros/replace.hpp"
#include "macrorl/qlearn/qfunction.hpp"

namespace macrorl::qlearn {

/// Linear decay from `start` to `end` over `decay_steps` atomic steps.
/// A decay_steps of 0 means "10% of the run".
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.05;
  std::size_t decay_steps = 0;
};

struct AgentConfig {
  double gamma = 0.99;
  double alpha = 0.1;
  EpsilonSchedule epsilon;
  double epsilon_reset = 0.5;
  std::vector<std::size_t> replacement_epochs;  // 1-based epochs, each <= epochs
  std::size_t epochs = 100;
  std::size_t epoch_length = 20'000;            // atomic env steps
  std::size_t eval_steps = 2'000;               // atomic steps of evaluation per epoch
  double eval_epsilon = 0.05;
  std::size_t target_sync_period = 1'000;
  std::size_t batch = 32;
  std::size_t replay_capacity = 100'000;
  std::size_t train_period = 1;                 // decisions between updates
  std::size_t learning_starts = 0;              // 0 means `batch`
  std::size_t gap_window = 5;
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
  std::size_t total_steps() const noexcept { return epochs * epoch_length; }
  std::size_t effective_decay_steps() const noexcept;
};

/// Replacement epochs {6, 13, 25, 50} rescaled to an `epochs` budget
/// (rounded down, deduplicated, zeros dropped).
std::vector<std::size_t> scaled_replacement_epochs(std::size_t epochs);

struct MacroEvent {
  std::size_t epoch = 0;  // 0 for the install before training
  std::size_t env_steps = 0;
  std::size_t trace_size = 0;        // atomic actions the constructor saw
  std::uint64_t trace_digest = 0;    // FNV-1a over the flattened trace
  std::vector<MacroDef> proposed;
  macros::ReplacementRecord record;
  std::vector<MacroDef> slots;       // slot contents after installation
  double epsilon_after = 0.0;
};

struct EvalResult {
  double mean_return = 0.0;
  double std_return = 0.0;
  std::vector<double> returns;
  std::vector<analysis::EpisodeRecord> episodes;
  std::size_t steps = 0;
};

struct TrainHooks {
  /// Called for each decision with the set as it was at selection time.
  std::function<void(const Transition&, const std::vector<ActionId>& executed, const ActionSet&)> on_decision;
  std::function<void(const MacroEvent&)> on_replacement;
};

struct TrainOptions {
  std::size_t trial = 0;
  TrainHooks hooks;
};

struct TrainResult {
  std::vector<analysis::MetricsRow> metrics;
  std::vector<MacroEvent> history;
  EvalResult final_eval;
  std::size_t stale_dropped = 0;
};

/// Runs `config.epochs` epochs of epsilon-greedy training with replay.
///
/// At every epoch listed in `config.replacement_epochs` the macro policy is
/// run on the trace gathered since the previous replacement, the result is
/// installed, the trace is cleared and epsilon is set to `epsilon_reset`
/// before decaying again at the usual rate. Repetition and random policies
/// are also installed once before training starts. After each epoch an
/// evaluation pass produces one MetricsRow. Deterministic for a given seed.
TrainResult train_phase(envs::Environment& env, ActionSet& set, QFunction& qf, const AgentConfig& config,
                        const macros::MacroPolicyConfig& policy, const TrainOptions& options = {});

/// Runs `episodes` episodes with epsilon-greedy selection; undiscounted
/// returns, mean and sample deviation (0 for one episode).
EvalResult evaluate(envs::Environment& env, const ActionSet& set, const QFunction& qf, std::size_t episodes,
                    double epsilon, std::mt19937_64& rng, double gamma = 1.0);

/// Like evaluate, but keeps starting complete episodes until at least
/// `min_steps` atomic steps were taken (always at least one episode).
EvalResult evaluate_for_steps(envs::Environment& env, const ActionSet& set, const QFunction& qf,
                              std::size_t min_steps, double epsilon, std::mt19937_64& rng, double gamma = 1.0);

}  // namespace macrorl::qlearn
