#pragma once

#include <vector>

#include "macrorl/core/action_set.hpp"
#include "macrorl/core/transition.hpp"
#include "macrorl/qlearn/qfunction.hpp"

namespace macrorl::qlearn {

struct UpdateStats {
  std::size_t used = 0;
  std::size_t stale = 0;  // dropped: slot contents changed since recording
};

/// True if the transition's macro slot still holds what it was recorded with.
bool is_current(const Transition& t, const ActionSet& set);

/// One learning step on `batch`. Targets come from `target_source` (the
/// frozen copy for approximators, `qf` itself for tabular) with disabled
/// outputs masked out of the max. Stale transitions are skipped. Throws
/// NumericError on a non-finite target or parameter.
UpdateStats q_update(QFunction& qf, const std::vector<const Transition*>& batch, const ActionSet& set,
                     double gamma, double alpha, const QFunction& target_source);

}  // namespace macrorl::qlearn
