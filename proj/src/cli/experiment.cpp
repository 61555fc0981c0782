#include "macrorl/cli/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include "macrorl/analysis/explicit_model.hpp"
#include "macrorl/analysis/value_iteration.hpp"
#include "macrorl/core/errors.hpp"
#include "macrorl/core/macro_io.hpp"

namespace macrorl::cli {

namespace fs = std::filesystem;

bool ExperimentOutcome::all_ok() const {
  return std::all_of(trials.begin(), trials.end(), [](const TrialOutcome& t) { return t.ok; });
}

std::vector<std::vector<analysis::MetricsRow>> ExperimentOutcome::successful_metrics() const {
  std::vector<std::vector<analysis::MetricsRow>> out;
  for (const auto& t : trials) {
    if (t.ok) out.push_back(t.result.metrics);
  }
  return out;
}

TrialOutcome run_trial(const ExperimentConfig& config, std::size_t trial) {
  TrialOutcome out;
  out.trial = trial;
  out.seed = config.trial_seed(trial);
  try {
    auto env = make_environment(config.env);
    ActionSet set = make_action_set(*env, config.macros);
    auto qf = make_qfunction(config.backend, *env, set.output_arity(), config.hidden, out.seed);
    qlearn::AgentConfig agent = config.agent;
    agent.seed = out.seed;
    qlearn::TrainOptions options;
    options.trial = trial;
    out.result = qlearn::train_phase(*env, set, *qf, agent, config.macros, options);
    out.qfunction_dump = qlearn::dump_qfunction(*qf, set);
    out.final_set = std::move(set);
    out.ok = true;
  } catch (const NumericError& e) {
    out.failure = e.what();
  } catch (const EnvironmentError& e) {
    out.failure = e.what();
  }
  return out;
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  ExperimentOutcome outcome;
  outcome.config = config;
  outcome.trials.resize(config.trials);

  std::size_t workers = config.workers > 0 ? config.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, config.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) outcome.trials[i] = run_trial(config, i);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const auto ok = outcome.successful_metrics();
  if (!ok.empty()) outcome.curves = analysis::aggregate_curves(ok);
  return outcome;
}

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  return out;
}

}  // namespace

void write_experiment(const ExperimentOutcome& outcome, const fs::path& dir) {
  fs::create_directories(dir);
  open_out(dir / "config.toml") << outcome.config.source_text;

  nlohmann::ordered_json manifest;
  manifest["name"] = outcome.config.name;
  manifest["env"] = outcome.config.env.describe();
  manifest["trials"] = nlohmann::json::array();

  std::vector<analysis::GapBucket> gap_rows;
  std::vector<analysis::LeadingDecision> leading;
  for (const auto& t : outcome.trials) {
    nlohmann::ordered_json entry;
    entry["trial"] = t.trial;
    entry["seed"] = t.seed;
    entry["status"] = t.ok ? "ok" : "failed";
    if (!t.ok) entry["failure"] = t.failure;
    manifest["trials"].push_back(entry);
    if (!t.ok) continue;

    const fs::path tdir = dir / ("trial_" + std::to_string(t.trial));
    fs::create_directories(tdir);
    {
      auto out = open_out(tdir / "metrics.csv");
      analysis::write_metrics_csv(out, t.result.metrics);
    }
    {
      auto out = open_out(tdir / "macro_history.jsonl");
      for (const auto& ev : t.result.history) {
        for (const auto& rec : slot_records(ev.slots, *t.final_set)) {
          nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json_line(rec));
          j["epoch"] = ev.epoch;
          j["env_steps"] = ev.env_steps;
          out << j.dump() << '\n';
        }
      }
    }
    {
      auto out = open_out(tdir / "macros.jsonl");
      write_macro_lines(out, slot_records(*t.final_set));
    }
    open_out(tdir / "qfunction.json") << t.qfunction_dump.dump() << '\n';

    for (const auto& ep : t.result.final_eval.episodes) {
      auto ld = analysis::reward_leading_trace(ep, outcome.config.agent.gap_window);
      leading.insert(leading.end(), ld.begin(), ld.end());
    }
  }

  {
    auto out = open_out(dir / "curves.csv");
    analysis::write_curves_csv(out, outcome.curves);
  }
  {
    auto out = open_out(dir / "gap.csv");
    analysis::write_gap_csv(out, analysis::gap_profile(leading), outcome.config.name);
  }
  open_out(dir / "manifest.json") << manifest.dump(2) << '\n';
}

double steps_to_threshold(const std::vector<analysis::MetricsRow>& rows, double threshold) {
  for (const auto& r : rows) {
    if (r.mean_return >= threshold) return static_cast<double>(r.env_steps);
  }
  return kNeverReached;
}

std::optional<double> optimal_return(const ExperimentConfig& config) {
  auto env = make_environment(config.env);
  auto* enumerable = dynamic_cast<envs::EnumerableEnvironment*>(env.get());
  if (!enumerable) return std::nullopt;
  const double gamma = config.agent.gamma < 1.0 ? config.agent.gamma : 0.999;
  const auto model = analysis::build_atomic_model(*enumerable, gamma);
  const auto sol = analysis::value_iteration(model, gamma);
  const ActionSet atomics = ActionSet::from_labels(env->action_labels(), 0);
  return analysis::greedy_rollout_return(*enumerable, atomics, model, sol, config.env.max_episode_steps);
}

void check_comparable(const std::vector<ExperimentConfig>& configs) {
  if (configs.empty()) throw ConfigError("compare", "no configs given");
  const auto& ref = configs.front();
  for (const auto& c : configs) {
    if (!(c.env == ref.env)) {
      throw ConfigError("env", "variant '" + c.name + "' uses " + c.env.describe() + " but '" + ref.name +
                                   "' uses " + ref.env.describe());
    }
    if (c.agent.total_steps() != ref.agent.total_steps()) {
      throw ConfigError("agent.epochs", "variant '" + c.name + "' has a different step budget");
    }
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = i + 1; j < configs.size(); ++j) {
      if (configs[i].name == configs[j].name) throw ConfigError("run.name", "duplicate variant name " + configs[i].name);
    }
  }
}

Comparison summarize(const std::vector<ExperimentOutcome>& outcomes, double threshold) {
  Comparison cmp;
  cmp.threshold = threshold;
  for (const auto& o : outcomes) {
    VariantSummary v;
    v.name = o.config.name;
    std::vector<double> finals;
    for (const auto& rows : o.successful_metrics()) {
      std::vector<double> returns;
      for (const auto& r : rows) returns.push_back(r.mean_return);
      finals.push_back(analysis::trailing_mean(returns, analysis::kSmoothingWindow).back());
      v.steps_to_threshold.push_back(steps_to_threshold(rows, threshold));
    }
    v.final_mean = analysis::mean_of(finals);
    v.final_deviation = analysis::sample_std(finals);
    if (!v.steps_to_threshold.empty()) v.median_steps_to_threshold = analysis::median_of(v.steps_to_threshold);
    cmp.variants.push_back(std::move(v));
  }
  if (!cmp.variants.empty()) {
    auto best = std::max_element(cmp.variants.begin(), cmp.variants.end(),
                                 [](const auto& a, const auto& b) { return a.final_mean < b.final_mean; });
    auto low = std::min_element(cmp.variants.begin(), cmp.variants.end(),
                                [](const auto& a, const auto& b) { return a.final_deviation < b.final_deviation; });
    best->best_mean = true;
    low->lowest_deviation = true;
  }
  return cmp;
}

void write_comparison_csv(std::ostream& out, const Comparison& cmp) {
  out << "variant,final_mean,final_deviation,median_steps_to_threshold,best_mean,lowest_deviation\n";
  for (const auto& v : cmp.variants) {
    out << v.name << ',' << analysis::format_number(v.final_mean) << ','
        << analysis::format_number(v.final_deviation) << ','
        << analysis::format_number(v.median_steps_to_threshold) << ',' << (v.best_mean ? 1 : 0) << ','
        << (v.lowest_deviation ? 1 : 0) << '\n';
  }
}

void print_comparison(std::ostream& out, const Comparison& cmp) {
  out << "threshold " << analysis::format_number(cmp.threshold) << "\n";
  out << std::left << std::setw(20) << "variant" << std::setw(26) << "mean (deviation)"
      << "steps to threshold\n";
  for (const auto& v : cmp.variants) {
    std::ostringstream cell;
    cell << std::fixed << std::setprecision(3) << (v.best_mean ? "*" : "") << v.final_mean << " ("
         << (v.lowest_deviation ? "*" : "") << v.final_deviation << ")";
    const std::string steps = std::isinf(v.median_steps_to_threshold)
                                  ? "∞"
                                  : std::to_string(static_cast<std::size_t>(v.median_steps_to_threshold));
    out << std::left << std::setw(20) << v.name << std::setw(26) << cell.str() << steps << '\n';
  }
  out << "(* best mean / lowest deviation)\n";
}

}  // namespace macrorl::cli
