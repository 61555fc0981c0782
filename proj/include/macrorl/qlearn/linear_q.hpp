#pragma once

#include <random>

#include "macrorl/qlearn/qfunction.hpp"

namespace macrorl::qlearn {

/// Q(s, .) = W phi(s) + b over observation features.
class LinearQ final : public DifferentiableQ {
 public:
  LinearQ(std::size_t input_dim, std::size_t output_arity);

  Backend backend() const override { return Backend::linear; }
  std::size_t output_arity() const override { return arity_; }
  std::size_t input_dim() const noexcept { return input_; }

  using QFunction::predict;
  void predict(const Observation& s, std::span<double> out) const override;
  void gradient(const Observation& s, OutputIndex output, double target, std::span<double> grad) const override;
  std::span<double> parameters() override { return params_; }
  std::span<const double> parameters() const override { return params_; }
  std::unique_ptr<QFunction> clone() const override { return std::make_unique<LinearQ>(*this); }
  nlohmann::json parameters_json() const override;
  static LinearQ from_json(const nlohmann::json& j);

 private:
  std::size_t input_;
  std::size_t arity_;
  std::vector<double> params_;  // W row-major (arity x input), then b
};

}  // namespace macrorl::qlearn
