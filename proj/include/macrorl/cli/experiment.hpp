#pragma once

#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "macrorl/cli/config.hpp"
#include "macrorl/qlearn/trainer.hpp"

namespace macrorl::cli {

inline constexpr double kNeverReached = std::numeric_limits<double>::infinity();

struct TrialOutcome {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string failure;  // diagnostic when !ok
  qlearn::TrainResult result;
  std::optional<ActionSet> final_set;
  nlohmann::json qfunction_dump;
};

struct ExperimentOutcome {
  ExperimentConfig config;
  std::vector<TrialOutcome> trials;
  std::vector<analysis::CurvePoint> curves;  // over successful trials

  bool all_ok() const;
  std::vector<std::vector<analysis::MetricsRow>> successful_metrics() const;
};

/// Runs one seeded trial end to end. Numeric failures are caught and
/// reported in the outcome rather than thrown.
TrialOutcome run_trial(const ExperimentConfig& config, std::size_t trial);

/// Runs every trial on a bounded worker pool. Results are ordered by trial
/// index regardless of scheduling.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// Writes config.toml, per-trial metrics/macro history/final macros/parameter
/// dump, the aggregated curves.csv, gap.csv and manifest.json.
void write_experiment(const ExperimentOutcome& outcome, const std::filesystem::path& dir);

/// Environment steps at the first epoch whose evaluation mean reaches
/// `threshold`; kNeverReached otherwise.
double steps_to_threshold(const std::vector<analysis::MetricsRow>& rows, double threshold);

/// Undiscounted return of the value-iteration policy from the start state,
/// for environments that can be enumerated.
std::optional<double> optimal_return(const ExperimentConfig& config);

struct VariantSummary {
  std::string name;
  double final_mean = 0.0;       // smoothed final-epoch return, mean over trials
  double final_deviation = 0.0;  // deviation of that quantity across trials
  double median_steps_to_threshold = kNeverReached;
  std::vector<double> steps_to_threshold;
  bool best_mean = false;
  bool lowest_deviation = false;
};

struct Comparison {
  double threshold = 0.0;
  std::vector<VariantSummary> variants;
};

/// Throws ConfigError unless all configs share the environment and the step
/// budget.
void check_comparable(const std::vector<ExperimentConfig>& configs);

Comparison summarize(const std::vector<ExperimentOutcome>& outcomes, double threshold);

void write_comparison_csv(std::ostream& out, const Comparison& cmp);
void print_comparison(std::ostream& out, const Comparison& cmp);

}  // namespace macrorl::cli
