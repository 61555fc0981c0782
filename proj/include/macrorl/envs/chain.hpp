#pragma once

#include "macrorl/envs/environment.hpp"

namespace macrorl::envs {

/// States s0..s(n-1) on a line, actions {left, right}. Left is clamped at s0.
/// Entering s(n-1) pays 1 and ends the episode; every step also pays
/// `step_penalty`.
class ChainEnv final : public EnumerableEnvironment {
 public:
  static constexpr ActionId kLeft = 0;
  static constexpr ActionId kRight = 1;

  explicit ChainEnv(std::size_t n, double step_penalty = 0.0);

  std::string name() const override { return "chain"; }
  std::size_t action_count() const override { return 2; }
  std::vector<std::string> action_labels() const override { return {"L", "R"}; }
  std::size_t state_count() const override { return n_; }
  std::size_t feature_dim() const override { return n_; }
  std::unique_ptr<Environment> clone() const override { return std::make_unique<ChainEnv>(*this); }

  std::vector<StateId> states() const override;
  bool is_terminal_state(StateId s) const override { return s + 1 == n_; }
  StateId start_state() const override { return 0; }
  TransitionTable transition_table() const override;

  std::size_t length() const noexcept { return n_; }
  double step_penalty() const noexcept { return penalty_; }
  StateId position() const noexcept { return pos_; }

 protected:
  StateId on_reset(std::uint64_t seed) override;
  Advance on_step(ActionId action) override;
  void fill_features(std::vector<double>& out) const override;
  void place(StateId s) override;

 private:
  TableEntry model(StateId s, ActionId a) const;

  std::size_t n_;
  double penalty_;
  StateId pos_ = 0;
};

}  // namespace macrorl::envs
