#include "macrorl/qlearn/trainer.hpp"

#include <algorithm>
#include <set>

#include "macrorl/core/episode_trace.hpp"
#include "macrorl/core/errors.hpp"
#include "macrorl/core/replay_buffer.hpp"
#include "macrorl/qlearn/policy.hpp"
#include "macrorl/qlearn/update.hpp"

namespace macrorl::qlearn {

void AgentConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("agent.gamma", "must lie in (0, 1]");
  if (!(alpha > 0.0)) throw ConfigError("agent.alpha", "must be positive");
  if (!(epsilon.end >= 0.0 && epsilon.end <= epsilon.start && epsilon.start <= 1.0)) {
    throw ConfigError("agent.epsilon_start", "need 0 <= epsilon_end <= epsilon_start <= 1");
  }
  if (!(epsilon_reset >= epsilon.end && epsilon_reset <= 1.0)) {
    throw ConfigError("agent.epsilon_reset", "must lie in [epsilon_end, 1]");
  }
  if (!(eval_epsilon >= 0.0 && eval_epsilon <= 1.0)) throw ConfigError("agent.eval_epsilon", "must lie in [0, 1]");
  if (epochs == 0) throw ConfigError("agent.epochs", "must be positive");
  if (epoch_length == 0) throw ConfigError("agent.epoch_length", "must be positive");
  if (eval_steps == 0) throw ConfigError("agent.eval_steps", "must be positive");
  if (batch == 0) throw ConfigError("agent.batch", "must be positive");
  if (replay_capacity < batch) throw ConfigError("agent.replay_capacity", "must hold at least one batch");
  if (train_period == 0) throw ConfigError("agent.train_period", "must be positive");
  if (target_sync_period == 0) throw ConfigError("agent.target_sync_period", "must be positive");
  if (gap_window == 0) throw ConfigError("agent.gap_window", "must be positive");
  for (std::size_t k : replacement_epochs) {
    if (k == 0 || k > epochs) {
      throw ConfigError("agent.replacement_epochs",
                        "epoch " + std::to_string(k) + " is outside the budget of " + std::to_string(epochs));
    }
  }
}

std::size_t AgentConfig::effective_decay_steps() const noexcept {
  if (epsilon.decay_steps > 0) return epsilon.decay_steps;
  return std::max<std::size_t>(1, total_steps() / 10);
}

std::vector<std::size_t> scaled_replacement_epochs(std::size_t epochs) {
  static constexpr std::size_t kReference[] = {6, 13, 25, 50};
  std::set<std::size_t> out;
  for (std::size_t k : kReference) {
    const std::size_t scaled = k * epochs / 50;
    if (scaled >= 1 && scaled <= epochs) out.insert(scaled);
  }
  return {out.begin(), out.end()};
}

namespace {

std::uint64_t fnv1a(const EpisodeTrace& trace) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& seg : trace.segments()) {
    for (ActionId a : seg) {
      h ^= static_cast<std::uint64_t>(a) + 1;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

EvalResult run_eval(envs::Environment& env, const ActionSet& set, const QFunction& qf, std::size_t episodes,
                    std::size_t min_steps, double epsilon, std::mt19937_64& rng, double gamma) {
  EvalResult res;
  const auto mask = set.enabled_mask();
  std::vector<double> q(qf.output_arity());
  while (res.returns.size() < episodes || res.steps < min_steps) {
    Observation obs = env.reset(rng());
    analysis::EpisodeRecord record;
    double total = 0.0;
    while (!env.done()) {
      qf.predict(obs, q);
      const OutputIndex idx = select_output(q, mask, epsilon, rng);
      auto exec = execute_output(env, set, idx, gamma);
      record.decisions.push_back({obs.state, q, mask, idx, exec.reward_total});
      total += exec.reward_total;
      res.steps += exec.tau;
      obs = std::move(exec.next);
    }
    res.returns.push_back(total);
    res.episodes.push_back(std::move(record));
  }
  res.mean_return = analysis::mean_of(res.returns);
  res.std_return = analysis::sample_std(res.returns);
  return res;
}

class Trial {
 public:
  Trial(envs::Environment& env, ActionSet& set, QFunction& qf, const AgentConfig& config,
        const macros::MacroPolicyConfig& policy, const TrainOptions& options)
      : env_(env),
        set_(set),
        qf_(qf),
        config_(config),
        policy_(policy),
        options_(options),
        rng_(config.seed),
        macro_rng_(config.seed ^ 0x9e3779b97f4a7c15ULL),
        replay_(config.replay_capacity),
        epsilon_(config.epsilon.start),
        decay_rate_((config.epsilon.start - config.epsilon.end) /
                     static_cast<double>(config.effective_decay_steps())),
        learning_starts_(std::max(config.batch, config.learning_starts)) {}

  TrainResult run() {
    if (qf_.backend() != Backend::tabular) {
      env_.set_emit_features(true);
      target_ = qf_.clone();
    }
    eval_env_ = env_.clone();
    start_episode();

    if (policy_.kind == macros::MacroKind::repetition || policy_.kind == macros::MacroKind::random) {
      replace(0);
    }

    for (std::size_t epoch = 1; epoch <= config_.epochs; ++epoch) {
      const std::size_t epoch_end = epoch * config_.epoch_length;
      while (env_steps_ < epoch_end) act_and_learn();

      const bool event = std::find(config_.replacement_epochs.begin(), config_.replacement_epochs.end(), epoch) !=
                         config_.replacement_epochs.end();
      if (event) replace(epoch);

      std::mt19937_64 eval_rng(config_.seed * 1000003ULL + epoch);
      EvalResult eval = run_eval(*eval_env_, set_, qf_, 1, config_.eval_steps, config_.eval_epsilon, eval_rng,
                                 config_.gamma);
      analysis::MetricsRow row;
      row.trial = options_.trial;
      row.epoch = epoch;
      row.env_steps = env_steps_;
      row.mean_return = eval.mean_return;
      row.std_return = eval.std_return;
      row.action_gap_mean = set_.enabled_count() >= 2 ? analysis::mean_leading_gap(eval.episodes, config_.gap_window)
                                                      : 0.0;
      row.epsilon = epsilon_;
      row.macro_event = event;
      result_.metrics.push_back(row);
      if (epoch == config_.epochs) result_.final_eval = std::move(eval);
    }
    return std::move(result_);
  }

 private:
  void start_episode() {
    obs_ = env_.reset(rng_());
    trace_.begin_episode();
  }

  void act_and_learn() {
    if (env_.done()) start_episode();
    const auto mask = set_.enabled_mask();
    q_.resize(qf_.output_arity());
    qf_.predict(obs_, q_);
    const OutputIndex idx = select_output(q_, mask, epsilon_, rng_);

    Transition t;
    t.state = obs_;
    t.output = idx;
    t.slot_version = set_.version_of(idx);
    auto exec = execute_output(env_, set_, idx, config_.gamma);
    t.reward_cum = exec.reward_cum;
    t.tau = exec.tau;
    t.next_state = exec.next;
    t.terminal = exec.terminal;
    t.truncated = exec.truncated;
    if (options_.hooks.on_decision) options_.hooks.on_decision(t, exec.executed, set_);

    trace_.record(exec.executed);
    obs_ = std::move(exec.next);
    env_steps_ += exec.tau;
    epsilon_ = std::max(config_.epsilon.end, epsilon_ - decay_rate_ * static_cast<double>(exec.tau));
    replay_.push(std::move(t));

    ++decisions_;
    if (replay_.size() >= learning_starts_ && decisions_ % config_.train_period == 0) learn();
    if (target_ && env_steps_ >= next_sync_) {
      target_ = qf_.clone();
      next_sync_ = env_steps_ + config_.target_sync_period;
    }
  }

  void learn() {
    batch_.clear();
    for (std::size_t i : replay_.sample_indices(config_.batch, rng_)) batch_.push_back(&replay_[i]);
    const QFunction& source = target_ ? *target_ : qf_;
    const auto stats = q_update(qf_, batch_, set_, config_.gamma, config_.alpha, source);
    result_.stale_dropped += stats.stale;
  }

  void replace(std::size_t epoch) {
    MacroEvent ev;
    ev.epoch = epoch;
    ev.env_steps = env_steps_;
    ev.trace_size = trace_.size();
    ev.trace_digest = fnv1a(trace_);
    ev.proposed = macros::construct_macros(policy_, set_, trace_, macro_rng_);
    ev.record = macros::replace_macros(set_, ev.proposed);
    ev.slots = set_.slots();
    trace_.clear();
    if (epoch > 0) epsilon_ = config_.epsilon_reset;
    ev.epsilon_after = epsilon_;
    if (options_.hooks.on_replacement) options_.hooks.on_replacement(ev);
    result_.history.push_back(std::move(ev));
  }

  envs::Environment& env_;
  ActionSet& set_;
  QFunction& qf_;
  const AgentConfig& config_;
  const macros::MacroPolicyConfig& policy_;
  const TrainOptions& options_;

  std::mt19937_64 rng_;
  std::mt19937_64 macro_rng_;
  ReplayBuffer replay_;
  EpisodeTrace trace_;
  std::unique_ptr<QFunction> target_;
  std::unique_ptr<envs::Environment> eval_env_;
  Observation obs_;
  std::vector<double> q_;
  std::vector<const Transition*> batch_;

  double epsilon_;
  double decay_rate_;
  std::size_t learning_starts_;
  std::size_t env_steps_ = 0;
  std::size_t decisions_ = 0;
  std::size_t next_sync_ = 0;
  TrainResult result_;
};

}  // namespace

TrainResult train_phase(envs::Environment& env, ActionSet& set, QFunction& qf, const AgentConfig& config,
                        const macros::MacroPolicyConfig& policy, const TrainOptions& options) {
  config.validate();
  policy.validate(set.atomic_count());
  if (set.atomic_count() != env.action_count()) throw Error("action set does not match the environment");
  if (qf.output_arity() != set.output_arity()) throw Error("Q-function arity does not match the action set");
  return Trial(env, set, qf, config, policy, options).run();
}

EvalResult evaluate(envs::Environment& env, const ActionSet& set, const QFunction& qf, std::size_t episodes,
                    double epsilon, std::mt19937_64& rng, double gamma) {
  if (episodes == 0) throw Error("evaluate needs at least one episode");
  return run_eval(env, set, qf, episodes, 0, epsilon, rng, gamma);
}

EvalResult evaluate_for_steps(envs::Environment& env, const ActionSet& set, const QFunction& qf,
                              std::size_t min_steps, double epsilon, std::mt19937_64& rng, double gamma) {
  return run_eval(env, set, qf, 1, min_steps, epsilon, rng, gamma);
}

}  // namespace macrorl::qlearn
