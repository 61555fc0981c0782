#include "macrorl/core/macro_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "macrorl/core/errors.hpp"

namespace macrorl {

std::vector<MacroSlotRecord> slot_records(const ActionSet& set) {
  return slot_records(set.slots(), set);
}

std::vector<MacroSlotRecord> slot_records(const std::vector<MacroDef>& macros, const ActionSet& set) {
  std::vector<MacroSlotRecord> out;
  out.reserve(macros.size());
  for (std::size_t i = 0; i < macros.size(); ++i) {
    const auto& m = macros[i];
    out.push_back({i, m.enabled, m.sequence, set.labels_of(m.sequence)});
  }
  return out;
}

std::string to_json_line(const MacroSlotRecord& record) {
  nlohmann::ordered_json j;
  j["slot"] = record.slot;
  j["enabled"] = record.enabled;
  j["actions"] = record.actions;
  j["labels"] = record.labels;
  return j.dump();
}

MacroSlotRecord parse_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed macro line: ") + e.what());
  }
  MacroSlotRecord r;
  try {
    r.slot = j.at("slot").get<std::size_t>();
    r.enabled = j.at("enabled").get<bool>();
    r.actions = j.at("actions").get<std::vector<ActionId>>();
    r.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("macro line missing or mistyped field: ") + e.what());
  }
  if (r.labels.size() != r.actions.size()) throw Error("macro line has mismatched actions/labels");
  return r;
}

void write_macro_lines(std::ostream& out, const std::vector<MacroSlotRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<MacroSlotRecord> read_macro_lines(std::istream& in) {
  std::vector<MacroSlotRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_json_line(line));
  }
  return out;
}

void apply_records(ActionSet& set, const std::vector<MacroSlotRecord>& records) {
  for (const auto& r : records) {
    set.set_slot(r.slot, r.enabled ? MacroDef::of(r.actions) : MacroDef::empty());
  }
}

}  // namespace macrorl
