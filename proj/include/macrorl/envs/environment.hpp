#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "macrorl/core/types.hpp"

namespace macrorl::envs {

inline constexpr std::size_t kDefaultEpisodeCap = 500;

struct StepOutcome {
  Observation observation;
  double reward = 0.0;
  bool terminal = false;
  bool truncated = false;  // step cap reached without a terminal state

  bool done() const noexcept { return terminal || truncated; }
};

/// Deterministic episodic environment with discrete actions.
///
/// `step` rejects calls after the episode ended until the next `reset`.
/// Reset with the same seed followed by the same actions replays the same
/// trajectory.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual std::size_t action_count() const = 0;
  virtual std::vector<std::string> action_labels() const = 0;
  /// Exclusive upper bound on state ids.
  virtual std::size_t state_count() const = 0;
  virtual std::size_t feature_dim() const = 0;
  virtual std::unique_ptr<Environment> clone() const = 0;

  bool deterministic() const noexcept { return true; }

  Observation reset(std::uint64_t seed);
  StepOutcome step(ActionId action);

  bool done() const noexcept { return done_; }
  std::size_t episode_steps() const noexcept { return steps_; }
  std::size_t max_episode_steps() const noexcept { return max_steps_; }
  void set_max_episode_steps(std::size_t cap);

  /// Ask for feature vectors in observations (approximator backends).
  void set_emit_features(bool on) noexcept { emit_features_ = on; }
  bool emits_features() const noexcept { return emit_features_; }

 protected:
  struct Advance {
    StateId state;
    double reward;
    bool terminal;
  };

  virtual StateId on_reset(std::uint64_t seed) = 0;
  virtual Advance on_step(ActionId action) = 0;
  virtual void fill_features(std::vector<double>& out) const = 0;

  Observation observe(StateId state) const;
  void restart_episode() noexcept {
    steps_ = 0;
    done_ = false;
  }

 private:
  std::size_t max_steps_ = kDefaultEpisodeCap;
  std::size_t steps_ = 0;
  bool done_ = true;
  bool emit_features_ = false;
};

struct TableEntry {
  StateId next = 0;
  double reward = 0.0;
  bool terminal = false;
};

/// Full (state, action) -> (next, reward, terminal) table of an enumerable environment.
using TransitionTable = std::map<std::pair<StateId, ActionId>, TableEntry>;

/// An environment whose state space can be enumerated and entered directly,
/// which is what the exact oracles need.
class EnumerableEnvironment : public Environment {
 public:
  /// Every valid state id (walls and similar holes excluded).
  virtual std::vector<StateId> states() const = 0;
  virtual bool is_terminal_state(StateId s) const = 0;
  virtual StateId start_state() const = 0;

  /// Starts an episode at `s`, as if reset had placed the agent there.
  Observation reset_to(StateId s);

  /// One-step model for every non-terminal state.
  virtual TransitionTable transition_table() const = 0;

 protected:
  virtual void place(StateId s) = 0;
};

}  // namespace macrorl::envs
