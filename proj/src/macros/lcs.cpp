#include "macrorl/macros/lcs.hpp"

#include <algorithm>
#include <vector>

namespace macrorl::macros {

std::size_t lcs(std::span<const ActionId> x, std::span<const ActionId> y) {
  if (x.empty() || y.empty()) return 0;
  // Two rolling rows of the usual DP table, indexed by prefix length of y.
  std::vector<std::size_t> prev(y.size() + 1, 0);
  std::vector<std::size_t> cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

}  // namespace macrorl::macros
