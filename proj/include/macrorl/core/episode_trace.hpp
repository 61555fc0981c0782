#pragma once

#include <vector>

#include "macrorl/core/types.hpp"

namespace macrorl {

/// Atomic actions executed since the last macro replacement, one segment per
/// episode. Macros are recorded expanded. Windows for discovery never cross a
/// segment boundary.
class EpisodeTrace {
 public:
  void begin_episode();
  void record(ActionId a);
  void record(const std::vector<ActionId>& actions);

  /// Drops everything. If an episode is in progress its remaining actions go
  /// into a fresh segment.
  void clear();

  const std::vector<std::vector<ActionId>>& segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  std::vector<ActionId> flattened() const;

 private:
  std::vector<std::vector<ActionId>> segments_;
  std::size_t total_ = 0;
};

}  // namespace macrorl
