#include "macrorl/analysis/explicit_model.hpp"

#include "macrorl/core/errors.hpp"

namespace macrorl::analysis {

const ModelEntry& ExplicitModel::at(StateId s, std::size_t k) const {
  const auto& e = entries.at(s * outputs.size() + k);
  if (!e) throw Error("no model entry for a terminal or invalid state");
  return *e;
}

bool ExplicitModel::atomic_only() const {
  for (const auto& e : entries) {
    if (e && e->duration != 1) return false;
  }
  return true;
}

namespace {

ExplicitModel build(envs::EnumerableEnvironment& env, const ActionSet& set, double gamma) {
  ExplicitModel model;
  model.state_count = env.state_count();
  model.states = env.states();
  model.start = env.start_state();
  model.terminal.assign(model.state_count, false);
  model.valid.assign(model.state_count, false);
  for (StateId s : model.states) {
    model.valid[s] = true;
    model.terminal[s] = env.is_terminal_state(s);
  }
  for (OutputIndex idx = 0; idx < set.output_arity(); ++idx) {
    if (set.is_enabled(idx)) model.outputs.push_back(idx);
  }
  model.entries.assign(model.state_count * model.outputs.size(), std::nullopt);

  for (StateId s : model.states) {
    if (model.terminal[s]) continue;
    for (std::size_t k = 0; k < model.outputs.size(); ++k) {
      env.reset_to(s);
      ModelEntry e;
      e.next = s;
      e.duration = 0;
      double discount = 1.0;
      for (ActionId a : set.expand(model.outputs[k])) {
        const auto out = env.step(a);
        e.reward += discount * out.reward;
        discount *= gamma;
        e.next = out.observation.state;
        ++e.duration;
        if (out.terminal) {
          e.terminal = true;
          break;
        }
        if (out.truncated) throw Error("episode cap reached while building the explicit model");
      }
      model.entries[s * model.outputs.size() + k] = e;
    }
  }
  return model;
}

}  // namespace

ExplicitModel build_atomic_model(envs::EnumerableEnvironment& env, double gamma) {
  return build(env, ActionSet::from_labels(env.action_labels(), 0), gamma);
}

ExplicitModel build_model(envs::EnumerableEnvironment& env, const ActionSet& set, double gamma) {
  if (set.atomic_count() != env.action_count()) throw Error("action set does not match the environment");
  return build(env, set, gamma);
}

}  // namespace macrorl::analysis
