#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macrorl/core/types.hpp"

namespace macrorl {

struct AtomicAction {
  ActionId id = 0;
  std::string label;
};

/// An open-loop sequence of atomic action ids. Disabled slots carry an empty
/// sequence and are never selectable.
struct MacroDef {
  std::vector<ActionId> sequence;
  bool enabled = false;

  static MacroDef of(std::vector<ActionId> sequence) { return {std::move(sequence), true}; }
  static MacroDef empty() { return {}; }

  std::size_t length() const noexcept { return sequence.size(); }
  bool operator==(const MacroDef&) const = default;
};

/// Atomic actions followed by a fixed number of macro slots.
///
/// Output indices [0, |A|) are atomic actions, [|A|, |A| + capacity) are
/// macro slots. The arity never changes after construction; replacing macros
/// only rewrites slot contents. Each slot carries a version that is bumped
/// whenever its contents change, so replay entries recorded against an older
/// macro can be recognised.
class ActionSet {
 public:
  ActionSet(std::vector<AtomicAction> atomics, std::size_t capacity);

  /// Labels become atomic ids 0..n-1; capacity defaults to |A|.
  static ActionSet from_labels(const std::vector<std::string>& labels);
  static ActionSet from_labels(const std::vector<std::string>& labels, std::size_t capacity);

  std::size_t atomic_count() const noexcept { return atomics_.size(); }
  std::size_t capacity() const noexcept { return slots_.size(); }
  std::size_t output_arity() const noexcept { return atomics_.size() + slots_.size(); }

  const std::vector<AtomicAction>& atomics() const noexcept { return atomics_; }
  const std::vector<MacroDef>& slots() const noexcept { return slots_; }
  const MacroDef& slot(std::size_t i) const;

  bool is_atomic(OutputIndex idx) const noexcept { return idx < atomics_.size(); }
  bool is_enabled(OutputIndex idx) const;
  std::vector<bool> enabled_mask() const;
  std::size_t enabled_count() const;

  /// Atomic ids executed when `idx` is chosen: a singleton for atomics, the
  /// macro sequence verbatim for slots. Throws OutputIndexError when out of
  /// range and DisabledSlotError for a disabled slot.
  std::vector<ActionId> expand(OutputIndex idx) const;

  /// 0 for atomics, the current content version for macro slots.
  std::uint64_t version_of(OutputIndex idx) const;

  /// Overwrites slot `i`; bumps its version only if the contents change.
  void set_slot(std::size_t i, MacroDef macro);

  std::string label_of(ActionId a) const;
  std::vector<std::string> labels_of(const std::vector<ActionId>& seq) const;

 private:
  void check_macro(const MacroDef& macro) const;

  std::vector<AtomicAction> atomics_;
  std::vector<MacroDef> slots_;
  std::vector<std::uint64_t> slot_versions_;
};

}  // namespace macrorl
