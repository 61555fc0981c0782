#include "macrorl/macros/constructors.hpp"

#include <algorithm>
#include <map>

#include "macrorl/core/errors.hpp"
#include "macrorl/macros/lcs.hpp"

namespace macrorl::macros {

std::string to_string(MacroKind kind) {
  switch (kind) {
    case MacroKind::none: return "none";
    case MacroKind::repetition: return "repetition";
    case MacroKind::frequency: return "frequency";
    case MacroKind::random: return "random";
  }
  return "none";
}

MacroKind parse_macro_kind(const std::string& text) {
  if (text == "none") return MacroKind::none;
  if (text == "repetition") return MacroKind::repetition;
  if (text == "frequency") return MacroKind::frequency;
  if (text == "random") return MacroKind::random;
  throw ConfigError("macros.kind", "unknown macro policy '" + text + "'");
}

void MacroPolicyConfig::validate(std::size_t atomic_count) const {
  if (kind == MacroKind::none) return;
  if (length < 2) throw ConfigError("macros.length", "must be at least 2");
  if (!(omega > 0.0 && omega <= 1.0)) throw ConfigError("macros.omega", "must lie in (0, 1]");
  if (effective_capacity(atomic_count) < 1) throw ConfigError("macros.capacity", "must be at least 1");
  if (kind == MacroKind::repetition && effective_capacity(atomic_count) < atomic_count) {
    throw ConfigError("macros.capacity", "repetition needs one slot per atomic action");
  }
}

std::vector<MacroDef> repetition_macros(const std::vector<AtomicAction>& atomics, std::size_t length) {
  if (length < 2) throw Error("macro length must be at least 2");
  std::vector<MacroDef> out;
  out.reserve(atomics.size());
  for (const auto& a : atomics) out.push_back(MacroDef::of(std::vector<ActionId>(length, a.id)));
  return out;
}

std::vector<MacroDef> random_macros(const std::vector<AtomicAction>& atomics, std::size_t length,
                                    std::size_t capacity, std::mt19937_64& rng) {
  if (length < 2) throw Error("macro length must be at least 2");
  if (atomics.empty()) throw Error("random macros need at least one atomic action");
  std::uniform_int_distribution<ActionId> pick(0, atomics.size() - 1);
  std::vector<MacroDef> out;
  out.reserve(capacity);
  for (std::size_t m = 0; m < capacity; ++m) {
    std::vector<ActionId> seq(length);
    for (auto& a : seq) a = pick(rng);
    out.push_back(MacroDef::of(std::move(seq)));
  }
  return out;
}

FrequencyReport frequency_report(const std::vector<std::vector<ActionId>>& segments, std::size_t length,
                                 std::size_t capacity, double omega) {
  FrequencyReport report;
  report.threshold = omega * static_cast<double>(length);
  if (length == 0) return report;

  struct Tally {
    std::size_t count = 0;
    std::size_t first = 0;
  };
  std::map<std::vector<ActionId>, Tally> tallies;
  std::size_t offset = 0;
  for (const auto& seg : segments) {
    for (std::size_t i = 0; i + length <= seg.size(); ++i) {
      std::vector<ActionId> window(seg.begin() + static_cast<std::ptrdiff_t>(i),
                                   seg.begin() + static_cast<std::ptrdiff_t>(i + length));
      auto [it, inserted] = tallies.try_emplace(std::move(window));
      if (inserted) it->second.first = offset + i;
      ++it->second.count;
    }
    offset += seg.size();
  }

  report.ranking.reserve(tallies.size());
  for (auto& [seq, tally] : tallies) {
    RankedWindow w;
    w.sequence = seq;
    w.count = tally.count;
    w.first_occurrence = tally.first;
    report.ranking.push_back(std::move(w));
  }
  std::sort(report.ranking.begin(), report.ranking.end(), [](const RankedWindow& a, const RankedWindow& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.first_occurrence < b.first_occurrence;
  });

  for (auto& w : report.ranking) {
    if (report.macros.size() >= capacity) break;
    w.considered = true;
    std::size_t worst = 0;
    std::optional<std::size_t> worst_at;
    for (std::size_t m = 0; m < report.macros.size(); ++m) {
      const std::size_t v = lcs(w.sequence, report.macros[m].sequence);
      if (!worst_at || v > worst) {
        worst = v;
        worst_at = m;
      }
    }
    w.lcs_value = worst;
    if (report.macros.empty() || static_cast<double>(worst) < report.threshold) {
      w.admitted = true;
      report.macros.push_back(MacroDef::of(w.sequence));
    } else {
      w.blocked_by = worst_at;
    }
  }
  return report;
}

std::vector<MacroDef> frequency_macros(const EpisodeTrace& trace, std::size_t length, std::size_t capacity,
                                       double omega) {
  return frequency_report(trace.segments(), length, capacity, omega).macros;
}

std::vector<MacroDef> construct_macros(const MacroPolicyConfig& config, const ActionSet& set,
                                       const EpisodeTrace& trace, std::mt19937_64& rng) {
  const std::size_t capacity = config.effective_capacity(set.atomic_count());
  switch (config.kind) {
    case MacroKind::none: return {};
    case MacroKind::repetition: return repetition_macros(set.atomics(), config.length);
    case MacroKind::frequency: return frequency_macros(trace, config.length, capacity, config.omega);
    case MacroKind::random: return random_macros(set.atomics(), config.length, capacity, rng);
  }
  return {};
}

}  // namespace macrorl::macros
