#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "macrorl/analysis/action_gap.hpp"

namespace macrorl::analysis {

/// Per-epoch, per-trial evaluation record. env_steps is cumulative training
/// steps and strictly increases within a trial.
struct MetricsRow {
  std::size_t trial = 0;
  std::size_t epoch = 0;
  std::size_t env_steps = 0;
  double mean_return = 0.0;
  double std_return = 0.0;
  double action_gap_mean = 0.0;
  double epsilon = 0.0;
  bool macro_event = false;

  bool operator==(const MetricsRow&) const = default;
};

struct CurvePoint {
  std::size_t epoch = 0;
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double max = 0.0;
  double smoothed_mean = 0.0;
};

inline constexpr std::size_t kSmoothingWindow = 5;

/// Sample standard deviation; 0 for fewer than two samples.
double sample_std(std::span<const double> xs);
double mean_of(std::span<const double> xs);
double median_of(std::vector<double> xs);

/// Trailing mean over the last `window` entries, truncated at the start.
std::vector<double> trailing_mean(std::span<const double> xs, std::size_t window);

/// Cross-trial statistics of mean_return per epoch. `trials` holds one row
/// stream per trial; every trial must cover the same epochs in order.
std::vector<CurvePoint> aggregate_curves(const std::vector<std::vector<MetricsRow>>& trials,
                                         std::size_t window = kSmoothingWindow);

/// Groups a flat row stream by trial id, keeping row order.
std::vector<std::vector<MetricsRow>> group_by_trial(const std::vector<MetricsRow>& rows);

inline constexpr const char* kMetricsHeader =
    "trial,epoch,env_steps,mean_return,std_return,action_gap_mean,epsilon,macro_event";
inline constexpr const char* kCurvesHeader = "epoch,mean,std,min,max,smoothed_mean";
inline constexpr const char* kGapHeader = "distance_to_reward,mean_gap,mean_top_q,agent_tag";

std::string format_number(double x);

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> read_metrics_csv(std::istream& in);
void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& points);
void write_gap_csv(std::ostream& out, const std::vector<GapBucket>& buckets, const std::string& agent_tag,
                   bool header = true);

}  // namespace macrorl::analysis
