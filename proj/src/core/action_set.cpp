#include "macrorl/core/action_set.hpp"

#include <algorithm>

#include "macrorl/core/errors.hpp"

namespace macrorl {

ActionSet::ActionSet(std::vector<AtomicAction> atomics, std::size_t capacity)
    : atomics_(std::move(atomics)), slots_(capacity), slot_versions_(capacity, 0) {
  if (atomics_.empty()) throw Error("action set needs at least one atomic action");
  for (std::size_t i = 0; i < atomics_.size(); ++i) {
    if (atomics_[i].id != i) throw Error("atomic action ids must be contiguous from 0");
  }
}

ActionSet ActionSet::from_labels(const std::vector<std::string>& labels) {
  return from_labels(labels, labels.size());
}

ActionSet ActionSet::from_labels(const std::vector<std::string>& labels, std::size_t capacity) {
  std::vector<AtomicAction> atomics;
  atomics.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) atomics.push_back({i, labels[i]});
  return ActionSet(std::move(atomics), capacity);
}

const MacroDef& ActionSet::slot(std::size_t i) const {
  if (i >= slots_.size()) throw OutputIndexError("macro slot " + std::to_string(i) + " out of range");
  return slots_[i];
}

bool ActionSet::is_enabled(OutputIndex idx) const {
  if (idx >= output_arity()) {
    throw OutputIndexError("output index " + std::to_string(idx) + " out of range (arity " +
                           std::to_string(output_arity()) + ")");
  }
  return is_atomic(idx) || slots_[idx - atomics_.size()].enabled;
}

std::vector<bool> ActionSet::enabled_mask() const {
  std::vector<bool> mask(output_arity(), true);
  for (std::size_t i = 0; i < slots_.size(); ++i) mask[atomics_.size() + i] = slots_[i].enabled;
  return mask;
}

std::size_t ActionSet::enabled_count() const {
  return atomics_.size() +
         static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(),
                                                [](const MacroDef& m) { return m.enabled; }));
}

std::vector<ActionId> ActionSet::expand(OutputIndex idx) const {
  if (!is_enabled(idx)) {
    throw DisabledSlotError("output index " + std::to_string(idx) +
                            " refers to a disabled macro slot; selection should have masked it");
  }
  if (is_atomic(idx)) return {idx};
  return slots_[idx - atomics_.size()].sequence;
}

std::uint64_t ActionSet::version_of(OutputIndex idx) const {
  if (idx >= output_arity()) throw OutputIndexError("output index " + std::to_string(idx) + " out of range");
  return is_atomic(idx) ? 0 : slot_versions_[idx - atomics_.size()];
}

void ActionSet::set_slot(std::size_t i, MacroDef macro) {
  if (i >= slots_.size()) throw OutputIndexError("macro slot " + std::to_string(i) + " out of range");
  if (!macro.enabled) macro.sequence.clear();
  check_macro(macro);
  if (slots_[i] == macro) return;
  slots_[i] = std::move(macro);
  ++slot_versions_[i];
}

void ActionSet::check_macro(const MacroDef& macro) const {
  if (!macro.enabled) return;
  if (macro.sequence.empty()) throw Error("enabled macro must have a nonempty sequence");
  for (ActionId a : macro.sequence) {
    if (a >= atomics_.size()) {
      throw Error("macro refers to action id " + std::to_string(a) +
                  " which is not an atomic action");
    }
  }
}

std::string ActionSet::label_of(ActionId a) const {
  if (a >= atomics_.size()) throw OutputIndexError("atomic id " + std::to_string(a) + " out of range");
  return atomics_[a].label;
}

std::vector<std::string> ActionSet::labels_of(const std::vector<ActionId>& seq) const {
  std::vector<std::string> out;
  out.reserve(seq.size());
  for (ActionId a : seq) out.push_back(label_of(a));
  return out;
}

}  // namespace macrorl
