#pragma once

#include <random>

#include "macrorl/qlearn/qfunction.hpp"

namespace macrorl::qlearn {

inline constexpr std::size_t kDefaultHidden = 64;

/// One hidden rectified-linear layer followed by a linear head per output.
///
/// Parameters are stored flat as [W1 (hidden x input), b1, W2 (arity x hidden), b2],
/// all row-major, and initialised uniformly in [-0.01, 0.01].
class NetworkQ final : public DifferentiableQ {
 public:
  NetworkQ(std::size_t input_dim, std::size_t output_arity, std::size_t hidden, std::uint64_t seed);

  Backend backend() const override { return Backend::network; }
  std::size_t output_arity() const override { return arity_; }
  std::size_t input_dim() const noexcept { return input_; }
  std::size_t hidden() const noexcept { return hidden_; }

  using QFunction::predict;
  void predict(const Observation& s, std::span<double> out) const override;
  void gradient(const Observation& s, OutputIndex output, double target, std::span<double> grad) const override;
  std::span<double> parameters() override { return params_; }
  std::span<const double> parameters() const override { return params_; }
  std::unique_ptr<QFunction> clone() const override { return std::make_unique<NetworkQ>(*this); }
  nlohmann::json parameters_json() const override;
  static NetworkQ from_json(const nlohmann::json& j);

 private:
  NetworkQ(std::size_t input_dim, std::size_t output_arity, std::size_t hidden);
  void hidden_activations(const Observation& s, std::span<double> h) const;

  std::size_t input_;
  std::size_t hidden_;
  std::size_t arity_;
  std::vector<double> params_;
};

}  // namespace macrorl::qlearn
