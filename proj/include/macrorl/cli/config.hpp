#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "macrorl/core/action_set.hpp"
#include "macrorl/envs/environment.hpp"
#include "macrorl/macros/constructors.hpp"
#include "macrorl/qlearn/qfunction.hpp"
#include "macrorl/qlearn/trainer.hpp"

namespace macrorl::cli {

/// Flat `[section]` / `key = value` document. Values are booleans, integers,
/// reals, double-quoted strings or arrays of integers. `#` starts a comment.
class KeyValueDocument {
 public:
  using Value = std::variant<bool, std::int64_t, double, std::string, std::vector<std::int64_t>>;

  static KeyValueDocument parse(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::map<std::string, Value>& values() const noexcept { return values_; }

  // Typed getters. Keys are "section.name"; failures raise ConfigError on the key.
  std::string get_string(const std::string& key) const;
  double get_real(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::size_t get_count(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;

 private:
  std::map<std::string, Value> values_;
};

struct EnvSpec {
  std::string kind = "chain";  // chain | gridworld | catch
  std::size_t n = 50;
  double step_penalty = 0.0;
  std::string layout;           // gridworld layout file
  std::size_t width = 3;
  std::size_t height = 3;
  std::size_t goal_x = 2;
  std::size_t goal_y = 2;
  std::size_t grid = 5;
  std::size_t frames = 4;
  std::size_t max_episode_steps = envs::kDefaultEpisodeCap;

  bool operator==(const EnvSpec&) const = default;
  std::string describe() const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  EnvSpec env;
  qlearn::Backend backend = qlearn::Backend::tabular;
  std::size_t hidden = 64;
  qlearn::AgentConfig agent;
  macros::MacroPolicyConfig macros;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string output = "runs/experiment";
  std::size_t workers = 0;  // 0: hardware concurrency
  std::string source_text;  // the config file verbatim

  /// Seed used by trial `i`.
  std::uint64_t trial_seed(std::size_t i) const noexcept { return seed + i; }
};

/// Parses and validates a config. Required keys: env.kind, agent.gamma,
/// agent.alpha. Unknown keys are rejected. Throws ConfigError.
ExperimentConfig parse_experiment(const std::string& text);
ExperimentConfig load_experiment(const std::string& path);

std::unique_ptr<envs::Environment> make_environment(const EnvSpec& spec);
ActionSet make_action_set(const envs::Environment& env, const macros::MacroPolicyConfig& macros);
std::unique_ptr<qlearn::QFunction> make_qfunction(qlearn::Backend backend, const envs::Environment& env,
                                                  std::size_t output_arity, std::size_t hidden,
                                                  std::uint64_t seed);

}  // namespace macrorl::cli
