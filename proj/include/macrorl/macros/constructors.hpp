#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "macrorl/core/action_set.hpp"
#include "macrorl/core/episode_trace.hpp"

namespace macrorl::macros {

enum class MacroKind { none, repetition, frequency, random };

std::string to_string(MacroKind kind);
MacroKind parse_macro_kind(const std::string& text);

struct MacroPolicyConfig {
  MacroKind kind = MacroKind::none;
  std::size_t length = 3;
  std::size_t capacity = 0;  // 0 means |A|
  double omega = 0.8;

  /// Throws ConfigError. `atomic_count` is needed for the repetition bound.
  void validate(std::size_t atomic_count) const;
  std::size_t effective_capacity(std::size_t atomic_count) const {
    return capacity == 0 ? atomic_count : capacity;
  }
};

/// One macro per atomic action, each the action repeated `length` times.
std::vector<MacroDef> repetition_macros(const std::vector<AtomicAction>& atomics, std::size_t length);

/// Capacity macros of i.i.d. uniform atomic ids.
std::vector<MacroDef> random_macros(const std::vector<AtomicAction>& atomics, std::size_t length,
                                    std::size_t capacity, std::mt19937_64& rng);

/// One distinct window of the trace, in rank order.
struct RankedWindow {
  std::vector<ActionId> sequence;
  std::size_t count = 0;
  std::size_t first_occurrence = 0;  // position in the flattened trace
  bool admitted = false;
  // For rejected windows: the accepted macro (by output order) and lcs that
  // blocked it. For admitted ones: the largest lcs against earlier picks.
  std::size_t lcs_value = 0;
  std::optional<std::size_t> blocked_by;
  bool considered = false;  // false once capacity was reached before this rank
};

struct FrequencyReport {
  std::vector<RankedWindow> ranking;
  std::vector<MacroDef> macros;
  double threshold = 0.0;  // omega * length
};

/// Frequency-ranked windows of length `length` filtered by overlap.
///
/// Windows are every contiguous run of `length` actions inside one trace
/// segment. Ranking is by count, then by earliest first occurrence. The top
/// window is always admitted; each later one is admitted only if its lcs
/// with every admitted macro is strictly below omega * length. Stops at
/// `capacity` admissions.
FrequencyReport frequency_report(const std::vector<std::vector<ActionId>>& segments, std::size_t length,
                                 std::size_t capacity, double omega);

std::vector<MacroDef> frequency_macros(const EpisodeTrace& trace, std::size_t length, std::size_t capacity,
                                       double omega);

/// Dispatches on `config.kind`; `none` yields an empty list.
std::vector<MacroDef> construct_macros(const MacroPolicyConfig& config, const ActionSet& set,
                                       const EpisodeTrace& trace, std::mt19937_64& rng);

}  // namespace macrorl::macros
