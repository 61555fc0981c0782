#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "macrorl/core/action_set.hpp"
#include "macrorl/core/types.hpp"

namespace macrorl::qlearn {

enum class Backend { tabular, linear, network };

std::string to_string(Backend b);
Backend parse_backend(const std::string& text);

/// Regression target for a single output of one state.
struct UpdateSample {
  const Observation* state = nullptr;
  OutputIndex output = 0;
  double target = 0.0;
};

/// Value backend producing one estimate per output of the expanded action
/// set. An update only ever moves the estimate of the output it targets.
class QFunction {
 public:
  virtual ~QFunction() = default;

  virtual Backend backend() const = 0;
  virtual std::size_t output_arity() const = 0;

  virtual void predict(const Observation& s, std::span<double> out) const = 0;
  std::vector<double> predict(const Observation& s) const;

  /// One step on 1/2 (target - Q(s, output))^2 per sample with step size
  /// `alpha`. Tabular applies samples one after another; approximators take
  /// a single step along the batch-mean gradient.
  virtual void update(std::span<const UpdateSample> batch, double alpha) = 0;

  virtual std::unique_ptr<QFunction> clone() const = 0;

  /// True if any parameter is NaN or infinite.
  virtual bool has_nonfinite() const = 0;

  virtual nlohmann::json parameters_json() const = 0;
};

/// Backends with a flat parameter vector and analytic gradients.
class DifferentiableQ : public QFunction {
 public:
  virtual std::span<double> parameters() = 0;
  virtual std::span<const double> parameters() const = 0;

  /// 1/2 (target - Q(s, output))^2
  double loss(const Observation& s, OutputIndex output, double target) const;

  /// d loss / d parameters, written into `grad` (same length as parameters()).
  virtual void gradient(const Observation& s, OutputIndex output, double target, std::span<double> grad) const = 0;

  void update(std::span<const UpdateSample> batch, double alpha) override;
  bool has_nonfinite() const override;
};

/// Parameter dump with a header recording backend, arity and slot versions.
nlohmann::json dump_qfunction(const QFunction& qf, const ActionSet& set);
std::unique_ptr<QFunction> load_qfunction(const nlohmann::json& dump);

}  // namespace macrorl::qlearn
