#include "macrorl/qlearn/linear_q.hpp"

#include "macrorl/core/errors.hpp"

namespace macrorl::qlearn {

LinearQ::LinearQ(std::size_t input_dim, std::size_t output_arity)
    : input_(input_dim), arity_(output_arity), params_(output_arity * (input_dim + 1), 0.0) {
  if (input_dim == 0 || output_arity == 0) throw Error("linear Q needs inputs and outputs");
}

void LinearQ::predict(const Observation& s, std::span<double> out) const {
  if (s.features.size() != input_) throw Error("linear Q: observation has no features of the right size");
  const double* bias = params_.data() + arity_ * input_;
  for (std::size_t o = 0; o < arity_; ++o) {
    const double* w = params_.data() + o * input_;
    double acc = bias[o];
    for (std::size_t i = 0; i < input_; ++i) acc += w[i] * s.features[i];
    out[o] = acc;
  }
}

void LinearQ::gradient(const Observation& s, OutputIndex output, double target, std::span<double> grad) const {
  if (output >= arity_) throw OutputIndexError("linear Q output out of range");
  std::fill(grad.begin(), grad.end(), 0.0);
  const double err = predict(s)[output] - target;
  for (std::size_t i = 0; i < input_; ++i) grad[output * input_ + i] = err * s.features[i];
  grad[arity_ * input_ + output] = err;
}

nlohmann::json LinearQ::parameters_json() const {
  return {{"input_dim", input_}, {"output_arity", arity_}, {"values", params_}};
}

LinearQ LinearQ::from_json(const nlohmann::json& j) {
  LinearQ q(j.at("input_dim").get<std::size_t>(), j.at("output_arity").get<std::size_t>());
  auto values = j.at("values").get<std::vector<double>>();
  if (values.size() != q.params_.size()) throw Error("linear dump has the wrong number of values");
  q.params_ = std::move(values);
  return q;
}

}  // namespace macrorl::qlearn
