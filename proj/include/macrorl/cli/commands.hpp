#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "macrorl/core/types.hpp"

namespace macrorl::cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitRuntime = 3 };

/// Environment variable that overrides the output directory of every run.
inline constexpr const char* kOutputDirEnv = "MACRORL_OUTPUT_DIR";

struct TrainArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
};

struct CompareArgs {
  std::vector<std::string> configs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  double threshold_fraction = 0.9;
  std::optional<double> threshold;  // absolute, overrides the fraction
};

struct DiscoverArgs {
  std::string trace;
  std::size_t length = 3;
  std::size_t capacity = 2;
  double omega = 0.8;
  std::size_t action_count = 0;      // 0: take from labels
  std::vector<std::string> labels;   // optional names for ids
  std::optional<std::string> output; // macro JSON-lines file
};

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_discover(const DiscoverArgs& args, std::ostream& out, std::ostream& err);

/// One episode per line, ids separated by whitespace or commas. Throws
/// Error naming line and column of the first id outside [0, action_count).
std::vector<std::vector<ActionId>> parse_trace(std::istream& in, std::size_t action_count);

}  // namespace macrorl::cli
