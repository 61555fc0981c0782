#include "macrorl/envs/environment.hpp"

#include "macrorl/core/errors.hpp"

namespace macrorl::envs {

Observation Environment::reset(std::uint64_t seed) {
  const StateId s = on_reset(seed);
  restart_episode();
  return observe(s);
}

StepOutcome Environment::step(ActionId action) {
  if (done_) throw EnvironmentError(name() + ": step called on a finished episode; reset first");
  if (action >= action_count()) {
    throw EnvironmentError(name() + ": action " + std::to_string(action) + " out of range");
  }
  const Advance adv = on_step(action);
  ++steps_;
  StepOutcome out;
  out.observation = observe(adv.state);
  out.reward = adv.reward;
  out.terminal = adv.terminal;
  out.truncated = !adv.terminal && steps_ >= max_steps_;
  done_ = out.done();
  return out;
}

void Environment::set_max_episode_steps(std::size_t cap) {
  if (cap == 0) throw EnvironmentError("episode cap must be positive");
  max_steps_ = cap;
}

Observation Environment::observe(StateId state) const {
  Observation obs;
  obs.state = state;
  if (emit_features_) {
    obs.features.assign(feature_dim(), 0.0);
    fill_features(obs.features);
  }
  return obs;
}

Observation EnumerableEnvironment::reset_to(StateId s) {
  place(s);
  restart_episode();
  return observe(s);
}

}  // namespace macrorl::envs
