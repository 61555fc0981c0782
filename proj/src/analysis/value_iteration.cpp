#include "macrorl/analysis/value_iteration.hpp"

#include <cmath>

#include "macrorl/core/errors.hpp"

namespace macrorl::analysis {

namespace {

double discount_for(double gamma, std::size_t tau) {
  double d = 1.0;
  for (std::size_t i = 0; i < tau; ++i) d *= gamma;
  return d;
}

ValueSolution solve(const ExplicitModel& model, double gamma, const SolveOptions& opts) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error("value iteration needs 0 < gamma < 1");
  if (model.action_count() == 0) throw Error("model has no actions");
  const std::size_t n_actions = model.action_count();

  ValueSolution sol;
  sol.v.assign(model.state_count, 0.0);
  sol.q.assign(model.state_count, std::vector<double>(n_actions, 0.0));
  sol.policy.assign(model.state_count, 0);
  std::vector<double> next_v(model.state_count, 0.0);

  while (true) {
    if (sol.sweeps >= opts.max_sweeps) {
      throw Error("value iteration did not converge within " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    double delta = 0.0;
    for (StateId s : model.states) {
      if (model.terminal[s]) continue;
      double best = 0.0;
      for (std::size_t k = 0; k < n_actions; ++k) {
        const ModelEntry& e = model.at(s, k);
        const double succ = e.terminal ? 0.0 : sol.v[e.next];
        const double q = e.reward + discount_for(gamma, e.duration) * succ;
        sol.q[s][k] = q;
        if (k == 0 || q > best) best = q;
      }
      next_v[s] = best;
      delta = std::max(delta, std::abs(best - sol.v[s]));
    }
    sol.v.swap(next_v);
    for (StateId s : model.states) next_v[s] = sol.v[s];
    ++sol.sweeps;
    sol.sweep_deltas.push_back(delta);
    if (delta < opts.tol) break;
  }

  for (StateId s : model.states) {
    if (model.terminal[s]) continue;
    std::size_t arg = 0;
    for (std::size_t k = 1; k < n_actions; ++k) {
      if (sol.q[s][k] > sol.q[s][arg]) arg = k;
    }
    sol.policy[s] = arg;
  }
  return sol;
}

}  // namespace

ValueSolution value_iteration(const ExplicitModel& model, double gamma, SolveOptions opts) {
  if (!model.atomic_only()) throw Error("value_iteration expects a model with atomic actions only");
  return solve(model, gamma, opts);
}

ValueSolution smdp_value_iteration(const ExplicitModel& model, double gamma, SolveOptions opts) {
  return solve(model, gamma, opts);
}

double greedy_rollout_return(envs::EnumerableEnvironment& env, const ActionSet& set,
                             const ExplicitModel& model, const ValueSolution& sol, std::size_t max_steps) {
  env.reset_to(model.start);
  StateId s = model.start;
  double total = 0.0;
  std::size_t steps = 0;
  if (model.terminal[s]) return 0.0;
  while (steps < max_steps) {
    for (ActionId a : set.expand(model.outputs[sol.policy[s]])) {
      const auto out = env.step(a);
      total += out.reward;
      s = out.observation.state;
      ++steps;
      if (out.done() || steps >= max_steps) return total;
    }
  }
  return total;
}

}  // namespace macrorl::analysis
