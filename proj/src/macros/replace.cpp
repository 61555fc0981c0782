#include "macrorl/macros/replace.hpp"

#include <algorithm>

namespace macrorl::macros {

ReplacementRecord replace_macros(ActionSet& set, std::vector<MacroDef> new_list) {
  ReplacementRecord rec;
  const std::size_t capacity = set.capacity();
  rec.installed = std::min(new_list.size(), capacity);
  rec.discarded = new_list.size() - rec.installed;
  rec.disabled = capacity - rec.installed;
  for (std::size_t i = 0; i < capacity; ++i) {
    if (i < rec.installed) {
      MacroDef m = std::move(new_list[i]);
      m.enabled = true;
      set.set_slot(i, std::move(m));
    } else {
      set.set_slot(i, MacroDef::empty());
    }
  }
  return rec;
}

}  // namespace macrorl::macros
