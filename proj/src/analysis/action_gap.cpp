#include "macrorl/analysis/action_gap.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "macrorl/core/errors.hpp"

namespace macrorl::analysis {

double action_gap(std::span<const double> q, const std::vector<bool>& enabled) {
  if (enabled.size() != q.size()) throw Error("action_gap: mask and Q vector differ in length");
  double first = -std::numeric_limits<double>::infinity();
  double second = first;
  std::size_t n = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!enabled[i]) continue;
    ++n;
    if (q[i] > first) {
      second = first;
      first = q[i];
    } else if (q[i] > second) {
      second = q[i];
    }
  }
  if (n < 2) throw Error("action_gap needs at least two enabled outputs");
  return first - second;
}

std::vector<LeadingDecision> reward_leading_trace(const EpisodeRecord& episode, std::size_t k) {
  std::vector<LeadingDecision> out;
  const auto& ds = episode.decisions;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!(ds[i].reward > 0.0)) continue;
    const std::size_t event = i + 1;
    const std::size_t begin = event > k ? event - k : 0;
    for (std::size_t j = begin; j < event; ++j) {
      LeadingDecision ld;
      ld.event = event;
      ld.decision = j;
      ld.distance = event - j;
      ld.state = ds[j].state;
      ld.q = ds[j].q;
      ld.gap = action_gap(ds[j].q, ds[j].enabled);
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < ds[j].q.size(); ++a) {
        if (ds[j].enabled[a]) top = std::max(top, ds[j].q[a]);
      }
      ld.top_q = top;
      out.push_back(std::move(ld));
    }
  }
  return out;
}

std::vector<GapBucket> gap_profile(const std::vector<LeadingDecision>& decisions) {
  std::map<std::size_t, GapBucket> buckets;
  for (const auto& d : decisions) {
    auto& b = buckets[d.distance];
    b.distance = d.distance;
    b.mean_gap += d.gap;
    b.mean_top_q += d.top_q;
    ++b.count;
  }
  std::vector<GapBucket> out;
  for (auto& [_, b] : buckets) {
    b.mean_gap /= static_cast<double>(b.count);
    b.mean_top_q /= static_cast<double>(b.count);
    out.push_back(b);
  }
  return out;
}

double mean_leading_gap(const std::vector<EpisodeRecord>& episodes, std::size_t k) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& ep : episodes) {
    for (const auto& d : reward_leading_trace(ep, k)) {
      sum += d.gap;
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace macrorl::analysis
