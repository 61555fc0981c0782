#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace macrorl {

using ActionId = std::size_t;
using OutputIndex = std::size_t;
using StateId = std::size_t;

// What an environment hands back after reset/step. `state` is an exact
// discrete id (tabular backends index on it); `features` is only filled when
// the environment was asked to emit features for approximator backends.
struct Observation {
  StateId state = 0;
  std::vector<double> features;

  bool operator==(const Observation&) const = default;
};

}  // namespace macrorl
