#pragma once

#include <span>
#include <string>
#include <vector>

#include "macrorl/core/types.hpp"

namespace macrorl::analysis {

/// Largest minus second-largest enabled Q-value. Needs two enabled outputs.
double action_gap(std::span<const double> q, const std::vector<bool>& enabled);

/// One agent decision during an episode.
struct DecisionPoint {
  StateId state = 0;
  std::vector<double> q;
  std::vector<bool> enabled;
  OutputIndex output = 0;
  double reward = 0.0;  // undiscounted reward collected while executing this decision
};

struct EpisodeRecord {
  std::vector<DecisionPoint> decisions;
};

/// A decision that precedes a positive reward. Executing decision i with a
/// positive reward is an event at decision point i + 1; the window covers the
/// `k` decision points before it, so distance 1 is the decision that earned it.
struct LeadingDecision {
  std::size_t event = 0;     // decision point index of the reward event
  std::size_t decision = 0;  // index into the episode
  std::size_t distance = 0;  // event - decision, in decisions
  StateId state = 0;
  std::vector<double> q;
  double gap = 0.0;
  double top_q = 0.0;
};

std::vector<LeadingDecision> reward_leading_trace(const EpisodeRecord& episode, std::size_t k);

struct GapBucket {
  std::size_t distance = 0;
  double mean_gap = 0.0;
  double mean_top_q = 0.0;
  std::size_t count = 0;
};

/// Averages leading decisions by distance-to-reward, ascending distance.
std::vector<GapBucket> gap_profile(const std::vector<LeadingDecision>& decisions);

/// Mean gap over all leading decisions of the given episodes; 0 when there are none.
double mean_leading_gap(const std::vector<EpisodeRecord>& episodes, std::size_t k);

}  // namespace macrorl::analysis
