#include "macrorl/qlearn/qfunction.hpp"

#include <cmath>

#include "macrorl/core/errors.hpp"
#include "macrorl/qlearn/linear_q.hpp"
#include "macrorl/qlearn/network_q.hpp"
#include "macrorl/qlearn/tabular_q.hpp"

namespace macrorl::qlearn {

std::string to_string(Backend b) {
  switch (b) {
    case Backend::tabular: return "tabular";
    case Backend::linear: return "linear";
    case Backend::network: return "network";
  }
  return "tabular";
}

Backend parse_backend(const std::string& text) {
  if (text == "tabular") return Backend::tabular;
  if (text == "linear") return Backend::linear;
  if (text == "network") return Backend::network;
  throw ConfigError("agent.backend", "unknown backend '" + text + "'");
}

std::vector<double> QFunction::predict(const Observation& s) const {
  std::vector<double> out(output_arity());
  predict(s, out);
  return out;
}

double DifferentiableQ::loss(const Observation& s, OutputIndex output, double target) const {
  const auto q = predict(s);
  const double err = target - q.at(output);
  return 0.5 * err * err;
}

void DifferentiableQ::update(std::span<const UpdateSample> batch, double alpha) {
  if (batch.empty()) return;
  auto params = parameters();
  std::vector<double> total(params.size(), 0.0);
  std::vector<double> grad(params.size());
  for (const auto& sample : batch) {
    gradient(*sample.state, sample.output, sample.target, grad);
    for (std::size_t i = 0; i < grad.size(); ++i) total[i] += grad[i];
  }
  const double scale = alpha / static_cast<double>(batch.size());
  for (std::size_t i = 0; i < params.size(); ++i) params[i] -= scale * total[i];
}

bool DifferentiableQ::has_nonfinite() const {
  for (double p : parameters()) {
    if (!std::isfinite(p)) return true;
  }
  return false;
}

nlohmann::json dump_qfunction(const QFunction& qf, const ActionSet& set) {
  if (qf.output_arity() != set.output_arity()) throw Error("Q-function arity does not match the action set");
  nlohmann::ordered_json header;
  header["backend"] = to_string(qf.backend());
  header["output_arity"] = qf.output_arity();
  std::vector<std::uint64_t> versions;
  for (std::size_t i = 0; i < set.capacity(); ++i) versions.push_back(set.version_of(set.atomic_count() + i));
  header["slot_versions"] = versions;
  nlohmann::json out;
  out["header"] = header;
  out["parameters"] = qf.parameters_json();
  return out;
}

std::unique_ptr<QFunction> load_qfunction(const nlohmann::json& dump) {
  try {
    const Backend b = parse_backend(dump.at("header").at("backend").get<std::string>());
    const auto arity = dump.at("header").at("output_arity").get<std::size_t>();
    const auto& p = dump.at("parameters");
    std::unique_ptr<QFunction> qf;
    switch (b) {
      case Backend::tabular: qf = std::make_unique<TabularQ>(TabularQ::from_json(p)); break;
      case Backend::linear: qf = std::make_unique<LinearQ>(LinearQ::from_json(p)); break;
      case Backend::network: qf = std::make_unique<NetworkQ>(NetworkQ::from_json(p)); break;
    }
    if (qf->output_arity() != arity) throw Error("parameter dump arity disagrees with its header");
    return qf;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed parameter dump: ") + e.what());
  }
}

}  // namespace macrorl::qlearn
