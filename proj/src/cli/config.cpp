#include "macrorl/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "macrorl/core/errors.hpp"
#include "macrorl/envs/catch.hpp"
#include "macrorl/envs/chain.hpp"
#include "macrorl/envs/gridworld.hpp"
#include "macrorl/qlearn/linear_q.hpp"
#include "macrorl/qlearn/network_q.hpp"
#include "macrorl/qlearn/tabular_q.hpp"

namespace macrorl::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::optional<std::int64_t> as_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> as_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const double v = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

KeyValueDocument::Value parse_value(const std::string& key, const std::string& raw) {
  if (raw.empty()) throw ConfigError(key, "missing value");
  if (raw == "true") return true;
  if (raw == "false") return false;
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') throw ConfigError(key, "unterminated string");
    return raw.substr(1, raw.size() - 2);
  }
  if (raw.front() == '[') {
    if (raw.back() != ']') throw ConfigError(key, "unterminated array");
    std::vector<std::int64_t> out;
    std::stringstream ss(raw.substr(1, raw.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto v = as_int(item);
      if (!v) throw ConfigError(key, "array items must be integers");
      out.push_back(*v);
    }
    return out;
  }
  if (const auto v = as_int(raw)) return *v;
  if (const auto v = as_real(raw)) return *v;
  throw ConfigError(key, "cannot parse value '" + raw + "'");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "run.name", "run.trials", "run.seed", "run.output", "run.workers",
      "env.kind", "env.n", "env.step_penalty", "env.layout", "env.width", "env.height", "env.goal_x",
      "env.goal_y", "env.grid", "env.frames", "env.max_episode_steps",
      "agent.backend", "agent.hidden", "agent.gamma", "agent.alpha", "agent.epsilon_start", "agent.epsilon_end",
      "agent.epsilon_decay_steps", "agent.epsilon_reset", "agent.replacement_epochs", "agent.epochs",
      "agent.epoch_length", "agent.eval_steps", "agent.eval_epsilon", "agent.target_sync_period", "agent.batch",
      "agent.replay_capacity", "agent.train_period", "agent.learning_starts", "agent.gap_window",
      "macros.kind", "macros.length", "macros.capacity", "macros.omega"};
  return keys;
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(const std::string& text) {
  KeyValueDocument doc;
  std::stringstream in(text);
  std::string line;
  std::string section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno), "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    const std::string name = trim(line.substr(0, eq));
    const std::string key = section.empty() ? name : section + "." + name;
    if (doc.values_.count(key)) throw ConfigError(key, "duplicate key");
    doc.values_[key] = parse_value(key, trim(line.substr(eq + 1)));
  }
  return doc;
}

std::string KeyValueDocument::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required field");
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw ConfigError(key, "expected a string");
}

double KeyValueDocument::get_real(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required field");
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
  throw ConfigError(key, "expected a number");
}

std::int64_t KeyValueDocument::get_int(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required field");
  if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  throw ConfigError(key, "expected an integer");
}

std::size_t KeyValueDocument::get_count(const std::string& key) const {
  const auto v = get_int(key);
  if (v < 0) throw ConfigError(key, "must not be negative");
  return static_cast<std::size_t>(v);
}

bool KeyValueDocument::get_bool(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required field");
  if (const auto* b = std::get_if<bool>(&it->second)) return *b;
  throw ConfigError(key, "expected true or false");
}

std::vector<std::int64_t> KeyValueDocument::get_int_list(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required field");
  if (const auto* l = std::get_if<std::vector<std::int64_t>>(&it->second)) return *l;
  throw ConfigError(key, "expected an array of integers");
}

std::string EnvSpec::describe() const {
  std::ostringstream out;
  out << kind;
  if (kind == "chain") out << "(n=" << n << ",penalty=" << step_penalty << ")";
  else if (kind == "gridworld" && !layout.empty()) out << "(" << layout << ")";
  else if (kind == "gridworld") out << "(" << width << "x" << height << ",goal=" << goal_x << "," << goal_y << ")";
  else if (kind == "catch") out << "(grid=" << grid << ",frames=" << frames << ")";
  out << ",cap=" << max_episode_steps;
  return out.str();
}

ExperimentConfig parse_experiment(const std::string& text) {
  const auto doc = KeyValueDocument::parse(text);
  for (const auto& [key, _] : doc.values()) {
    if (!known_keys().count(key)) throw ConfigError(key, "unknown field");
  }

  ExperimentConfig c;
  c.source_text = text;
  auto opt_count = [&](const char* key, std::size_t& dst) {
    if (doc.has(key)) dst = doc.get_count(key);
  };
  auto opt_real = [&](const char* key, double& dst) {
    if (doc.has(key)) dst = doc.get_real(key);
  };

  if (doc.has("run.name")) c.name = doc.get_string("run.name");
  opt_count("run.trials", c.trials);
  if (doc.has("run.seed")) c.seed = doc.get_count("run.seed");
  if (doc.has("run.output")) c.output = doc.get_string("run.output");
  opt_count("run.workers", c.workers);
  if (c.trials == 0) throw ConfigError("run.trials", "must be positive");

  c.env.kind = doc.get_string("env.kind");
  if (c.env.kind != "chain" && c.env.kind != "gridworld" && c.env.kind != "catch") {
    throw ConfigError("env.kind", "expected chain, gridworld or catch");
  }
  opt_count("env.n", c.env.n);
  opt_real("env.step_penalty", c.env.step_penalty);
  if (doc.has("env.layout")) c.env.layout = doc.get_string("env.layout");
  opt_count("env.width", c.env.width);
  opt_count("env.height", c.env.height);
  opt_count("env.goal_x", c.env.goal_x);
  opt_count("env.goal_y", c.env.goal_y);
  opt_count("env.grid", c.env.grid);
  opt_count("env.frames", c.env.frames);
  opt_count("env.max_episode_steps", c.env.max_episode_steps);

  if (doc.has("agent.backend")) c.backend = qlearn::parse_backend(doc.get_string("agent.backend"));
  opt_count("agent.hidden", c.hidden);
  auto& a = c.agent;
  a.gamma = doc.get_real("agent.gamma");
  a.alpha = doc.get_real("agent.alpha");
  opt_real("agent.epsilon_start", a.epsilon.start);
  opt_real("agent.epsilon_end", a.epsilon.end);
  opt_count("agent.epsilon_decay_steps", a.epsilon.decay_steps);
  opt_real("agent.epsilon_reset", a.epsilon_reset);
  opt_count("agent.epochs", a.epochs);
  opt_count("agent.epoch_length", a.epoch_length);
  opt_count("agent.eval_steps", a.eval_steps);
  opt_real("agent.eval_epsilon", a.eval_epsilon);
  opt_count("agent.target_sync_period", a.target_sync_period);
  opt_count("agent.batch", a.batch);
  opt_count("agent.replay_capacity", a.replay_capacity);
  opt_count("agent.train_period", a.train_period);
  opt_count("agent.learning_starts", a.learning_starts);
  opt_count("agent.gap_window", a.gap_window);
  a.seed = c.seed;

  if (doc.has("macros.kind")) c.macros.kind = macros::parse_macro_kind(doc.get_string("macros.kind"));
  opt_count("macros.length", c.macros.length);
  opt_count("macros.capacity", c.macros.capacity);
  opt_real("macros.omega", c.macros.omega);

  if (doc.has("agent.replacement_epochs")) {
    for (std::int64_t k : doc.get_int_list("agent.replacement_epochs")) {
      if (k <= 0) throw ConfigError("agent.replacement_epochs", "epochs are numbered from 1");
      a.replacement_epochs.push_back(static_cast<std::size_t>(k));
    }
  } else if (c.macros.kind == macros::MacroKind::frequency) {
    a.replacement_epochs = qlearn::scaled_replacement_epochs(a.epochs);
  }

  a.validate();
  if (c.hidden == 0) throw ConfigError("agent.hidden", "must be positive");
  // Building the environment validates its parameters.
  std::unique_ptr<envs::Environment> env;
  try {
    env = make_environment(c.env);
  } catch (const EnvironmentError& e) {
    throw ConfigError("env", e.what());
  }
  c.macros.validate(env->action_count());
  return c;
}

ExperimentConfig load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment(ss.str());
}

std::unique_ptr<envs::Environment> make_environment(const EnvSpec& spec) {
  std::unique_ptr<envs::Environment> env;
  if (spec.kind == "chain") {
    env = std::make_unique<envs::ChainEnv>(spec.n, spec.step_penalty);
  } else if (spec.kind == "gridworld") {
    if (!spec.layout.empty()) {
      env = std::make_unique<envs::GridworldEnv>(envs::GridworldEnv::load(spec.layout));
    } else {
      env = std::make_unique<envs::GridworldEnv>(spec.width, spec.height, std::set<envs::Cell>{},
                                                 envs::Cell{spec.goal_x, spec.goal_y});
    }
  } else if (spec.kind == "catch") {
    env = std::make_unique<envs::CatchEnv>(spec.grid, spec.frames);
  } else {
    throw ConfigError("env.kind", "unknown environment '" + spec.kind + "'");
  }
  env->set_max_episode_steps(spec.max_episode_steps);
  return env;
}

ActionSet make_action_set(const envs::Environment& env, const macros::MacroPolicyConfig& macros) {
  return ActionSet::from_labels(env.action_labels(), macros.effective_capacity(env.action_count()));
}

std::unique_ptr<qlearn::QFunction> make_qfunction(qlearn::Backend backend, const envs::Environment& env,
                                                  std::size_t output_arity, std::size_t hidden,
                                                  std::uint64_t seed) {
  switch (backend) {
    case qlearn::Backend::tabular: return std::make_unique<qlearn::TabularQ>(env.state_count(), output_arity);
    case qlearn::Backend::linear: return std::make_unique<qlearn::LinearQ>(env.feature_dim(), output_arity);
    case qlearn::Backend::network:
      return std::make_unique<qlearn::NetworkQ>(env.feature_dim(), output_arity, hidden, seed);
  }
  throw ConfigError("agent.backend", "unknown backend");
}

}  // namespace macrorl::cli
