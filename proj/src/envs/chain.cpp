#include "macrorl/envs/chain.hpp"

#include "macrorl/core/errors.hpp"

namespace macrorl::envs {

ChainEnv::ChainEnv(std::size_t n, double step_penalty) : n_(n), penalty_(step_penalty) {
  if (n < 2) throw EnvironmentError("chain needs at least 2 states");
}

std::vector<StateId> ChainEnv::states() const {
  std::vector<StateId> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = i;
  return out;
}

TableEntry ChainEnv::model(StateId s, ActionId a) const {
  StateId next = s;
  if (a == kRight) next = s + 1;
  else if (s > 0) next = s - 1;
  const bool terminal = is_terminal_state(next);
  return {next, (terminal ? 1.0 : 0.0) + penalty_, terminal};
}

TransitionTable ChainEnv::transition_table() const {
  TransitionTable table;
  for (StateId s = 0; s + 1 < n_; ++s) {
    for (ActionId a = 0; a < 2; ++a) table[{s, a}] = model(s, a);
  }
  return table;
}

StateId ChainEnv::on_reset(std::uint64_t) {
  pos_ = 0;
  return pos_;
}

Environment::Advance ChainEnv::on_step(ActionId action) {
  const TableEntry e = model(pos_, action);
  pos_ = e.next;
  return {e.next, e.reward, e.terminal};
}

void ChainEnv::fill_features(std::vector<double>& out) const { out[pos_] = 1.0; }

void ChainEnv::place(StateId s) {
  if (s >= n_) throw EnvironmentError("chain state out of range");
  pos_ = s;
}

}  // namespace macrorl::envs
