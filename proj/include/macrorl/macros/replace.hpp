#pragma once

#include <vector>

#include "macrorl/core/action_set.hpp"

namespace macrorl::macros {

struct ReplacementRecord {
  std::size_t installed = 0;
  std::size_t discarded = 0;  // cut off past capacity
  std::size_t disabled = 0;   // empty slots after the fill
};

/// Installs `new_list` into the macro slots in order. Entries past capacity
/// are dropped, unused slots are emptied and disabled. Atomic outputs and the
/// output arity are untouched.
ReplacementRecord replace_macros(ActionSet& set, std::vector<MacroDef> new_list);

}  // namespace macrorl::macros
