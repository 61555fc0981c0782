#include "macrorl/qlearn/tabular_q.hpp"

#include <cmath>

#include "macrorl/core/errors.hpp"

namespace macrorl::qlearn {

TabularQ::TabularQ(std::size_t state_count, std::size_t output_arity)
    : states_(state_count), arity_(output_arity), table_(state_count * output_arity, 0.0) {
  if (state_count == 0 || output_arity == 0) throw Error("tabular Q needs states and outputs");
}

double& TabularQ::at(StateId s, OutputIndex a) {
  if (s >= states_ || a >= arity_) throw OutputIndexError("tabular Q index out of range");
  return table_[s * arity_ + a];
}

double TabularQ::at(StateId s, OutputIndex a) const {
  if (s >= states_ || a >= arity_) throw OutputIndexError("tabular Q index out of range");
  return table_[s * arity_ + a];
}

void TabularQ::predict(const Observation& s, std::span<double> out) const {
  if (s.state >= states_) throw OutputIndexError("tabular Q state out of range");
  std::copy_n(table_.begin() + static_cast<std::ptrdiff_t>(s.state * arity_), arity_, out.begin());
}

void TabularQ::update(std::span<const UpdateSample> batch, double alpha) {
  for (const auto& sample : batch) {
    double& q = at(sample.state->state, sample.output);
    q += alpha * (sample.target - q);
  }
}

bool TabularQ::has_nonfinite() const {
  for (double v : table_) {
    if (!std::isfinite(v)) return true;
  }
  return false;
}

nlohmann::json TabularQ::parameters_json() const {
  return {{"state_count", states_}, {"output_arity", arity_}, {"values", table_}};
}

TabularQ TabularQ::from_json(const nlohmann::json& j) {
  TabularQ q(j.at("state_count").get<std::size_t>(), j.at("output_arity").get<std::size_t>());
  auto values = j.at("values").get<std::vector<double>>();
  if (values.size() != q.table_.size()) throw Error("tabular dump has the wrong number of values");
  q.table_ = std::move(values);
  return q;
}

}  // namespace macrorl::qlearn
