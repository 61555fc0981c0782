#include "macrorl/core/episode_trace.hpp"

namespace macrorl {

void EpisodeTrace::begin_episode() {
  if (!segments_.empty() && segments_.back().empty()) return;
  segments_.emplace_back();
}

void EpisodeTrace::record(ActionId a) {
  if (segments_.empty()) segments_.emplace_back();
  segments_.back().push_back(a);
  ++total_;
}

void EpisodeTrace::record(const std::vector<ActionId>& actions) {
  for (ActionId a : actions) record(a);
}

void EpisodeTrace::clear() {
  segments_.clear();
  segments_.emplace_back();
  total_ = 0;
}

std::vector<ActionId> EpisodeTrace::flattened() const {
  std::vector<ActionId> out;
  out.reserve(total_);
  for (const auto& seg : segments_) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

}  // namespace macrorl
