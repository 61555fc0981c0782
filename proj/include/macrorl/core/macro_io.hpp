#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "macrorl/core/action_set.hpp"

namespace macrorl {

// One line of the macro JSON-lines format:
//   {"slot":0,"enabled":true,"actions":[1,1,1],"labels":["R","R","R"]}
struct MacroSlotRecord {
  std::size_t slot = 0;
  bool enabled = false;
  std::vector<ActionId> actions;
  std::vector<std::string> labels;

  bool operator==(const MacroSlotRecord&) const = default;
};

std::vector<MacroSlotRecord> slot_records(const ActionSet& set);
std::vector<MacroSlotRecord> slot_records(const std::vector<MacroDef>& macros, const ActionSet& set);

std::string to_json_line(const MacroSlotRecord& record);
MacroSlotRecord parse_json_line(const std::string& line);

void write_macro_lines(std::ostream& out, const std::vector<MacroSlotRecord>& records);
std::vector<MacroSlotRecord> read_macro_lines(std::istream& in);

/// Installs records into the matching slots of `set`.
void apply_records(ActionSet& set, const std::vector<MacroSlotRecord>& records);

}  // namespace macrorl
