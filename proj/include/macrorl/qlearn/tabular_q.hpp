#pragma once

#include "macrorl/qlearn/qfunction.hpp"

namespace macrorl::qlearn {

/// Dense state-id x output table, zero initialised.
class TabularQ final : public QFunction {
 public:
  TabularQ(std::size_t state_count, std::size_t output_arity);

  Backend backend() const override { return Backend::tabular; }
  std::size_t output_arity() const override { return arity_; }
  std::size_t state_count() const noexcept { return states_; }

  using QFunction::predict;
  void predict(const Observation& s, std::span<double> out) const override;
  void update(std::span<const UpdateSample> batch, double alpha) override;
  std::unique_ptr<QFunction> clone() const override { return std::make_unique<TabularQ>(*this); }
  bool has_nonfinite() const override;
  nlohmann::json parameters_json() const override;
  static TabularQ from_json(const nlohmann::json& j);

  double& at(StateId s, OutputIndex a);
  double at(StateId s, OutputIndex a) const;

 private:
  std::size_t states_;
  std::size_t arity_;
  std::vector<double> table_;
};

}  // namespace macrorl::qlearn
