#pragma once

#include <cstddef>
#include <span>

#include "macrorl/core/types.hpp"

namespace macrorl::macros {

/// Length of the longest (not necessarily contiguous) common subsequence.
std::size_t lcs(std::span<const ActionId> x, std::span<const ActionId> y);

}  // namespace macrorl::macros
