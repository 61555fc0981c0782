#include "macrorl/qlearn/policy.hpp"

#include "macrorl/core/errors.hpp"

namespace macrorl::qlearn {

double discount_power(double gamma, std::size_t tau) {
  double d = 1.0;
  for (std::size_t i = 0; i < tau; ++i) d *= gamma;
  return d;
}

OutputIndex masked_argmax(std::span<const double> q, const std::vector<bool>& enabled) {
  if (enabled.size() != q.size()) throw Error("Q vector and mask differ in length");
  bool found = false;
  OutputIndex best = 0;
  for (OutputIndex i = 0; i < q.size(); ++i) {
    if (!enabled[i]) continue;
    if (!found || q[i] > q[best]) {
      best = i;
      found = true;
    }
  }
  if (!found) throw Error("no enabled output to choose from");
  return best;
}

double smdp_target(double reward_cum, std::size_t tau, double gamma, std::span<const double> next_q,
                   const std::vector<bool>& next_enabled, bool terminal) {
  if (tau < 1) throw Error("smdp_target: tau must be at least 1");
  const OutputIndex best = masked_argmax(next_q, next_enabled);
  if (terminal) return reward_cum;
  return reward_cum + discount_power(gamma, tau) * next_q[best];
}

OutputIndex select_output(std::span<const double> q, const std::vector<bool>& enabled, double epsilon,
                          std::mt19937_64& rng) {
  if (enabled.size() != q.size()) throw Error("Q vector and mask differ in length");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < epsilon) {
    std::size_t n = 0;
    for (bool e : enabled) n += e ? 1 : 0;
    if (n == 0) throw Error("no enabled output to choose from");
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (OutputIndex i = 0; i < enabled.size(); ++i) {
      if (!enabled[i]) continue;
      if (pick-- == 0) return i;
    }
  }
  return masked_argmax(q, enabled);
}

ExecutionResult execute_output(envs::Environment& env, const ActionSet& set, OutputIndex idx, double gamma) {
  if (env.done()) throw EnvironmentError("execute_output on a finished episode");
  ExecutionResult r;
  double discount = 1.0;
  for (ActionId a : set.expand(idx)) {
    auto out = env.step(a);
    r.reward_cum += discount * out.reward;
    r.reward_total += out.reward;
    discount *= gamma;
    ++r.tau;
    r.executed.push_back(a);
    r.next = std::move(out.observation);
    r.terminal = out.terminal;
    r.truncated = out.truncated;
    if (out.done()) break;
  }
  return r;
}

}  // namespace macrorl::qlearn
