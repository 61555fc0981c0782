#include "macrorl/qlearn/network_q.hpp"

#include <Eigen/Core>

#include "macrorl/core/errors.hpp"

namespace macrorl::qlearn {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;

}  // namespace

NetworkQ::NetworkQ(std::size_t input_dim, std::size_t output_arity, std::size_t hidden)
    : input_(input_dim),
      hidden_(hidden),
      arity_(output_arity),
      params_(hidden * input_dim + hidden + output_arity * hidden + output_arity, 0.0) {
  if (input_dim == 0 || output_arity == 0 || hidden == 0) throw Error("network Q needs nonzero layer sizes");
}

NetworkQ::NetworkQ(std::size_t input_dim, std::size_t output_arity, std::size_t hidden, std::uint64_t seed)
    : NetworkQ(input_dim, output_arity, hidden) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> init(-0.01, 0.01);
  for (double& p : params_) p = init(rng);
}

void NetworkQ::hidden_activations(const Observation& s, std::span<double> h) const {
  if (s.features.size() != input_) throw Error("network Q: observation has no features of the right size");
  const auto w1 = ConstMatrixMap(params_.data(), static_cast<Eigen::Index>(hidden_), static_cast<Eigen::Index>(input_));
  const auto b1 = ConstVectorMap(params_.data() + hidden_ * input_, static_cast<Eigen::Index>(hidden_));
  const auto x = ConstVectorMap(s.features.data(), static_cast<Eigen::Index>(input_));
  VectorMap(h.data(), static_cast<Eigen::Index>(hidden_)) = (w1 * x + b1).cwiseMax(0.0);
}

void NetworkQ::predict(const Observation& s, std::span<double> out) const {
  std::vector<double> h(hidden_);
  hidden_activations(s, h);
  const double* tail = params_.data() + hidden_ * input_ + hidden_;
  const auto w2 = ConstMatrixMap(tail, static_cast<Eigen::Index>(arity_), static_cast<Eigen::Index>(hidden_));
  const auto b2 = ConstVectorMap(tail + arity_ * hidden_, static_cast<Eigen::Index>(arity_));
  VectorMap(out.data(), static_cast<Eigen::Index>(arity_)) =
      w2 * ConstVectorMap(h.data(), static_cast<Eigen::Index>(hidden_)) + b2;
}

void NetworkQ::gradient(const Observation& s, OutputIndex output, double target, std::span<double> grad) const {
  if (output >= arity_) throw OutputIndexError("network Q output out of range");
  if (grad.size() != params_.size()) throw Error("gradient buffer has the wrong size");
  std::fill(grad.begin(), grad.end(), 0.0);

  std::vector<double> h(hidden_);
  hidden_activations(s, h);
  const std::size_t w2_off = hidden_ * input_ + hidden_;
  const std::size_t b2_off = w2_off + arity_ * hidden_;
  const double* w2_row = params_.data() + w2_off + output * hidden_;

  double q = params_[b2_off + output];
  for (std::size_t j = 0; j < hidden_; ++j) q += w2_row[j] * h[j];
  const double err = q - target;

  grad[b2_off + output] = err;
  for (std::size_t j = 0; j < hidden_; ++j) {
    grad[w2_off + output * hidden_ + j] = err * h[j];
    if (h[j] <= 0.0) continue;  // relu is flat here
    const double dz = err * w2_row[j];
    grad[hidden_ * input_ + j] = dz;
    double* row = grad.data() + j * input_;
    for (std::size_t i = 0; i < input_; ++i) row[i] = dz * s.features[i];
  }
}

nlohmann::json NetworkQ::parameters_json() const {
  return {{"input_dim", input_}, {"hidden", hidden_}, {"output_arity", arity_}, {"values", params_}};
}

NetworkQ NetworkQ::from_json(const nlohmann::json& j) {
  NetworkQ q(j.at("input_dim").get<std::size_t>(), j.at("output_arity").get<std::size_t>(),
             j.at("hidden").get<std::size_t>());
  auto values = j.at("values").get<std::vector<double>>();
  if (values.size() != q.params_.size()) throw Error("network dump has the wrong number of values");
  q.params_ = std::move(values);
  return q;
}

}  // namespace macrorl::qlearn
