#pragma once

#include <cstdint>

#include "macrorl/core/types.hpp"

namespace macrorl {

/// One agent decision as stored in replay. `reward_cum` is the discounted
/// in-decision sum r1 + g*r2 + ... + g^(tau-1)*r_tau and `tau` the number of
/// atomic steps the decision consumed.
struct Transition {
  Observation state;
  OutputIndex output = 0;
  double reward_cum = 0.0;
  std::size_t tau = 1;
  Observation next_state;
  bool terminal = false;   // absorbing: no bootstrap
  bool truncated = false;  // episode cap hit; bootstraps normally
  std::uint64_t slot_version = 0;
};

}  // namespace macrorl
