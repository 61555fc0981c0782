#include "macrorl/qlearn/update.hpp"

#include <cmath>

#include "macrorl/core/errors.hpp"
#include "macrorl/qlearn/policy.hpp"

namespace macrorl::qlearn {

bool is_current(const Transition& t, const ActionSet& set) {
  if (t.output >= set.output_arity()) return false;
  if (set.is_atomic(t.output)) return true;
  return set.is_enabled(t.output) && set.version_of(t.output) == t.slot_version;
}

UpdateStats q_update(QFunction& qf, const std::vector<const Transition*>& batch, const ActionSet& set,
                     double gamma, double alpha, const QFunction& target_source) {
  UpdateStats stats;
  const auto mask = set.enabled_mask();
  std::vector<UpdateSample> samples;
  samples.reserve(batch.size());
  std::vector<double> next_q(target_source.output_arity());
  for (const Transition* t : batch) {
    if (!is_current(*t, set)) {
      ++stats.stale;
      continue;
    }
    double target = t->reward_cum;
    if (!t->terminal) {
      target_source.predict(t->next_state, next_q);
      target = smdp_target(t->reward_cum, t->tau, gamma, next_q, mask, false);
    }
    if (!std::isfinite(target)) throw NumericError("non-finite Bellman target");
    samples.push_back({&t->state, t->output, target});
  }
  qf.update(samples, alpha);
  if (qf.has_nonfinite()) throw NumericError("non-finite parameter after update");
  stats.used = samples.size();
  return stats;
}

}  // namespace macrorl::qlearn
