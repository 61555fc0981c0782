// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Detail lines are indented.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "macrorl/analysis/action_gap.hpp"
#include "macrorl/analysis/curves.hpp"
#include "macrorl/analysis/explicit_model.hpp"
#include "macrorl/analysis/value_iteration.hpp"
#include "macrorl/cli/config.hpp"
#include "macrorl/cli/experiment.hpp"
#include "macrorl/core/action_set.hpp"
#include "macrorl/envs/chain.hpp"
#include "macrorl/macros/constructors.hpp"
#include "macrorl/macros/replace.hpp"
#include "macrorl/qlearn/network_q.hpp"
#include "macrorl/qlearn/policy.hpp"
#include "macrorl/qlearn/tabular_q.hpp"
#include "macrorl/qlearn/trainer.hpp"
#include "oracles/oracles.hpp"

namespace fs = std::filesystem;
using namespace macrorl;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

std::string list(const std::vector<double>& xs) {
  std::string out;
  for (double x : xs) out += (out.empty() ? "" : " ") + num(x);
  return out;
}

// ---------------------------------------------------------------- 1

Verdict oracle_convergence() {
  Verdict v{1, "tabular agent converges to value iteration on chain n=5", false, {}};
  const auto t0 = Clock::now();
  qlearn::AgentConfig config;
  config.gamma = 0.9;
  config.alpha = 0.1;
  config.epochs = 10;
  config.epoch_length = 5000;
  config.eval_steps = 20;
  config.seed = 1;
  envs::ChainEnv env(5);
  ActionSet set = ActionSet::from_labels(env.action_labels());
  qlearn::TabularQ q(env.state_count(), set.output_arity());
  const auto result = qlearn::train_phase(env, set, q, config, {});
  const auto oracle = analysis::value_iteration(analysis::build_atomic_model(env, 0.9), 0.9);

  double v_err = 0.0;
  double q_err = 0.0;
  for (StateId s = 0; s + 1 < 5; ++s) {
    v_err = std::max(v_err, std::abs(std::max(q.at(s, 0), q.at(s, 1)) - oracle.v[s]));
    for (std::size_t a = 0; a < 2; ++a) q_err = std::max(q_err, std::abs(q.at(s, a) - oracle.q[s][a]));
  }
  const double elapsed = seconds_since(t0);
  v.pass = v_err < 1e-2 && q_err < 1e-2 && elapsed < 60.0 && result.metrics.back().env_steps <= 50000;
  v.details.push_back("steps " + std::to_string(result.metrics.back().env_steps) + ", max |max_a Q - V*| " +
                      num(v_err) + ", max |Q - Q*| " + num(q_err) + ", V*(s0) " + num(oracle.v[0]) + ", " +
                      num(elapsed) + " s");
  return v;
}

// ---------------------------------------------------------------- 2

Verdict flattening() {
  Verdict v{2, "macro execution equals stepwise execution on chain n=10", false, {}};
  const double gamma = 0.9;
  const std::size_t n = 10;
  envs::ChainEnv proto(n);
  const auto atomics = ActionSet::from_labels(proto.action_labels());
  ActionSet set = ActionSet::from_labels(proto.action_labels());
  macros::replace_macros(set, macros::repetition_macros(atomics.atomics(), 3));
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  for (OutputIndex idx = set.atomic_count(); idx < set.output_arity(); ++idx) {
    for (StateId s = 0; s + 1 < n; ++s) {
      envs::ChainEnv a(n);
      a.reset_to(s);
      std::vector<StateId> visited_macro;
      // run through execute_output one decision at a time, then compare the
      // states it passed through by replaying the executed actions
      const auto macro = qlearn::execute_output(a, set, idx, gamma);
      envs::ChainEnv replay(n);
      replay.reset_to(s);
      for (ActionId x : macro.executed) visited_macro.push_back(replay.step(x).observation.state);

      envs::ChainEnv b(n);
      b.reset_to(s);
      std::vector<StateId> visited_step;
      double cum = 0.0;
      double discount = 1.0;
      envs::StepOutcome last;
      for (ActionId x : set.expand(idx)) {
        last = b.step(x);
        visited_step.push_back(last.observation.state);
        cum += discount * last.reward;
        discount *= gamma;
        if (last.done()) break;
      }
      ++checks;
      const bool same = visited_macro == visited_step && macro.reward_cum == cum &&
                        macro.tau == visited_step.size() && macro.next.state == last.observation.state &&
                        macro.terminal == last.terminal;
      if (!same) ++mismatches;
    }
  }
  v.pass = mismatches == 0 && checks == 2 * (n - 1);
  v.details.push_back(std::to_string(checks) + " state x macro pairs, " + std::to_string(mismatches) +
                      " mismatches");
  return v;
}

// ---------------------------------------------------------------- 3

Verdict single_step_reduction() {
  Verdict v{3, "semi-MDP target with tau=1 equals the one-step target bit for bit", false, {}};
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> r(-100.0, 100.0);
  std::uniform_real_distribution<double> g(1e-3, 1.0);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t arity = 2 + rng() % 8;
    std::vector<double> next(arity);
    std::vector<bool> mask(arity, true);
    for (auto& x : next) x = r(rng);
    for (std::size_t k = 1; k < arity; ++k) mask[k] = (rng() & 1) != 0;
    const double reward = r(rng);
    const double gamma = g(rng);
    double best = -INFINITY;
    for (std::size_t k = 0; k < arity; ++k) {
      if (mask[k]) best = std::max(best, next[k]);
    }
    const double one_step = reward + gamma * best;
    const double smdp = qlearn::smdp_target(reward, 1, gamma, next, mask, false);
    if (std::memcmp(&one_step, &smdp, sizeof(double)) != 0) ++mismatches;
  }
  v.pass = mismatches == 0;
  v.details.push_back("10000 random inputs, " + std::to_string(mismatches) + " differ");
  return v;
}

// ---------------------------------------------------------------- 4

std::vector<std::vector<ActionId>> as_sequences(const std::vector<MacroDef>& ms) {
  std::vector<std::vector<ActionId>> out;
  for (const auto& m : ms) out.push_back(m.sequence);
  return out;
}

Verdict frequency_oracle() {
  Verdict v{4, "frequency discovery matches the brute-force oracle", false, {}};
  const auto t0 = Clock::now();
  bool worked = true;
  {
    EpisodeTrace trace;
    trace.begin_episode();
    trace.record({0, 0, 1, 0, 0, 1, 0, 0, 1});
    worked = as_sequences(macros::frequency_macros(trace, 3, 3, 0.8)) ==
                 std::vector<std::vector<ActionId>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}} &&
             as_sequences(macros::frequency_macros(trace, 3, 3, 0.6)) ==
                 std::vector<std::vector<ActionId>>{{0, 0, 1}};
  }
  std::mt19937_64 rng(4242);
  std::size_t mismatches = 0;
  std::size_t longest = 0;
  std::size_t nonempty = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t alphabet = 1 + rng() % 6;
    const std::size_t len = 2 + rng() % 5;
    const std::size_t cap = 1 + rng() % 6;
    const double omega = 0.2 * static_cast<double>(1 + rng() % 5);
    const std::size_t total = rng() % 10001;
    longest = std::max(longest, total);
    std::vector<std::vector<ActionId>> segments(1);
    for (std::size_t k = 0; k < total; ++k) {
      segments.back().push_back(rng() % alphabet);
      if (rng() % 200 == 0) segments.emplace_back();
    }
    EpisodeTrace trace;
    for (const auto& s : segments) {
      trace.begin_episode();
      trace.record(s);
    }
    const auto got = as_sequences(macros::frequency_macros(trace, len, cap, omega));
    nonempty += got.empty() ? 0 : 1;
    if (got != oracle::frequency_bruteforce(segments, len, cap, omega)) ++mismatches;
  }
  v.pass = worked && mismatches == 0;
  v.details.push_back(std::string("worked AAB example ") + (worked ? "matches" : "DIFFERS") + "; 1000 traces (" +
                      std::to_string(nonempty) + " with macros, longest " + std::to_string(longest) + "), " +
                      std::to_string(mismatches) + " mismatches, " + num(seconds_since(t0)) + " s");
  return v;
}

// ---------------------------------------------------------------- 5

double worst_gradient_error(qlearn::NetworkQ& net, std::mt19937_64& rng, std::size_t dim, std::size_t& zero_bad) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Observation s;
  s.features.resize(dim);
  for (auto& x : s.features) x = n01(rng);
  const OutputIndex out = rng() % net.output_arity();
  const double target = n01(rng);
  const double h = 1e-5;
  auto params = net.parameters();
  std::vector<double> grad(params.size());
  net.gradient(s, out, target, grad);
  auto numeric = [&](std::size_t i) {
    const double keep = params[i];
    params[i] = keep + h;
    const double up = net.loss(s, out, target);
    params[i] = keep - h;
    const double down = net.loss(s, out, target);
    params[i] = keep;
    return (up - down) / (2 * h);
  };
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < grad.size(); ++i) {
    if (grad[i] != 0.0) active.push_back(i);
    else if (std::abs(numeric(i)) > 1e-9) ++zero_bad;
  }
  std::shuffle(active.begin(), active.end(), rng);
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min<std::size_t>(20, active.size()); ++k) {
    const double a = grad[active[k]];
    const double b = numeric(active[k]);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
  }
  return active.size() >= 20 ? worst : INFINITY;
}

Verdict gradient_check() {
  Verdict v{5, "network gradient matches central differences", false, {}};
  const std::size_t dim = 10;
  qlearn::NetworkQ net(dim, 6, 64, 17);
  std::mt19937_64 rng(31337);
  std::size_t zero_bad = 0;
  const double at_init = worst_gradient_error(net, rng, dim, zero_bad);

  std::normal_distribution<double> n01(0.0, 1.0);
  std::vector<Observation> inputs(32);
  for (auto& o : inputs) {
    o.features.resize(dim);
    for (auto& x : o.features) x = n01(rng);
  }
  for (int i = 0; i < 1000; ++i) {
    const auto& o = inputs[rng() % inputs.size()];
    const qlearn::UpdateSample sample{&o, static_cast<OutputIndex>(rng() % 6), n01(rng)};
    net.update(std::span(&sample, 1), 0.01);
  }
  const double trained = worst_gradient_error(net, rng, dim, zero_bad);
  v.pass = at_init < 1e-4 && trained < 1e-4 && zero_bad == 0 && !net.has_nonfinite();
  v.details.push_back("max relative error at init " + num(at_init) + ", after 1000 updates " + num(trained) +
                      " (20 coordinates each, h=1e-5); zero-gradient coordinates with nonzero differences: " +
                      std::to_string(zero_bad));
  return v;
}

// ---------------------------------------------------------------- 6-9

const char* kChainBase = R"([run]
trials = 10
seed = 1
[env]
kind = "chain"
n = 50
[agent]
backend = "tabular"
gamma = 0.99
alpha = 0.1
epochs = 1000
epoch_length = 300
eval_steps = 200
)";

cli::ExperimentConfig chain_variant(const std::string& name, const std::string& kind) {
  std::string text = kChainBase;
  text += "[macros]\nkind = \"" + kind + "\"\nlength = 5\n";
  text.insert(text.find("trials"), "name = \"" + name + "\"\n");
  auto c = cli::parse_experiment(text);
  c.workers = 1;
  return c;
}

struct VariantRun {
  cli::ExperimentOutcome outcome;
  std::vector<double> steps;  // per seed
  double median_steps = cli::kNeverReached;
  std::vector<double> final_returns;
  std::vector<double> leading_gaps;  // per seed with reward-leading decisions
  std::size_t seeds_without_leading = 0;
};

VariantRun run_variant(const cli::ExperimentConfig& config, double threshold, const fs::path& out_dir) {
  VariantRun r;
  r.outcome = cli::run_experiment(config);
  cli::write_experiment(r.outcome, out_dir / config.name);
  for (const auto& t : r.outcome.trials) {
    if (!t.ok) {
      r.steps.push_back(cli::kNeverReached);
      continue;
    }
    r.steps.push_back(cli::steps_to_threshold(t.result.metrics, threshold));
    r.final_returns.push_back(t.result.metrics.back().mean_return);
    std::vector<analysis::LeadingDecision> leading;
    for (const auto& ep : t.result.final_eval.episodes) {
      auto part = analysis::reward_leading_trace(ep, config.agent.gap_window);
      leading.insert(leading.end(), part.begin(), part.end());
    }
    if (leading.empty()) {
      ++r.seeds_without_leading;
      continue;
    }
    double sum = 0.0;
    for (const auto& d : leading) sum += d.gap;
    r.leading_gaps.push_back(sum / static_cast<double>(leading.size()));
  }
  r.median_steps = analysis::median_of(r.steps);
  return r;
}

std::size_t reached(const std::vector<double>& steps) {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](double s) { return !std::isinf(s); }));
}

// Gap of the optimal Q-values at the last `k` states before the goal on the
// optimal path, with and without repetition macros.
std::pair<double, double> oracle_leading_gaps(std::size_t n, std::size_t len, double gamma, std::size_t k) {
  envs::ChainEnv env(n);
  const ActionSet atomic = ActionSet::from_labels(env.action_labels());
  ActionSet with = ActionSet::from_labels(env.action_labels());
  macros::replace_macros(with, macros::repetition_macros(atomic.atomics(), len));
  const auto a = analysis::value_iteration(analysis::build_atomic_model(env, gamma), gamma);
  const auto m = analysis::smdp_value_iteration(analysis::build_model(env, with, gamma), gamma);
  double ga = 0.0;
  double gm = 0.0;
  for (StateId s = n - 1 - k; s + 1 < n; ++s) {
    ga += analysis::action_gap(a.q[s], std::vector<bool>(a.q[s].size(), true));
    gm += analysis::action_gap(m.q[s], std::vector<bool>(m.q[s].size(), true));
  }
  return {ga / static_cast<double>(k), gm / static_cast<double>(k)};
}

std::vector<Verdict> chain_experiments(const fs::path& out_dir, Clock::time_point suite_start) {
  const auto t0 = Clock::now();
  const auto atomic_cfg = chain_variant("atomic", "none");
  const auto rep_cfg = chain_variant("repetition5", "repetition");
  const auto rand_cfg = chain_variant("random5", "random");
  const auto freq_cfg = chain_variant("frequency5", "frequency");
  cli::check_comparable({atomic_cfg, rep_cfg, rand_cfg, freq_cfg});
  const double threshold = 0.9 * cli::optimal_return(atomic_cfg).value();

  const auto atomic = run_variant(atomic_cfg, threshold, out_dir);
  const auto rep = run_variant(rep_cfg, threshold, out_dir);
  const auto rnd = run_variant(rand_cfg, threshold, out_dir);
  const auto freq = run_variant(freq_cfg, threshold, out_dir);
  const double elapsed = seconds_since(t0);

  auto describe = [&](const std::string& name, const VariantRun& r) {
    return name + ": steps to " + num(threshold) + " [" + list(r.steps) + "], median " + num(r.median_steps) +
           ", " + std::to_string(reached(r.steps)) + "/10 seeds reach it";
  };

  std::vector<Verdict> out;
  {
    Verdict v{6, "repetition-5 reaches 0.9 of optimal at least 1.5x faster than atomic (median of 10 seeds)", false, {}};
    const double total = seconds_since(suite_start);
    v.pass = rep.median_steps < atomic.median_steps && atomic.median_steps >= 1.5 * rep.median_steps &&
             !std::isinf(rep.median_steps) && total < 600.0;
    v.details.push_back(describe("atomic", atomic));
    v.details.push_back(describe("repetition5", rep));
    v.details.push_back("chain experiments " + num(elapsed) + " s, suite so far " + num(total) + " s");
    out.push_back(v);
  }
  {
    Verdict v{7, "repetition-5 median steps to threshold <= random-5", false, {}};
    v.pass = rep.median_steps <= rnd.median_steps;
    v.details.push_back(describe("repetition5", rep));
    v.details.push_back(describe("random5", rnd));
    out.push_back(v);
  }
  {
    Verdict v{8, "macro agent's reward-leading action gap at least 2x the atomic agent's (median of 10 seeds)", false, {}};
    const bool defined = !rep.leading_gaps.empty() && !atomic.leading_gaps.empty();
    const double macro_gap = defined ? analysis::median_of(rep.leading_gaps) : NAN;
    const double atomic_gap = defined ? analysis::median_of(atomic.leading_gaps) : NAN;
    v.pass = defined && macro_gap >= 2.0 * atomic_gap;
    v.details.push_back("repetition5 per-seed gaps [" + list(rep.leading_gaps) + "], " +
                        std::to_string(rep.seeds_without_leading) + " seeds without rewarded episodes, median " +
                        num(macro_gap));
    v.details.push_back("atomic per-seed gaps [" + list(atomic.leading_gaps) + "], " +
                        std::to_string(atomic.seeds_without_leading) +
                        " seeds without rewarded episodes, median " + num(atomic_gap));
    v.details.push_back("frequency5 per-seed gaps [" + list(freq.leading_gaps) + "]");
    const auto [oa, om] = oracle_leading_gaps(50, 5, atomic_cfg.agent.gamma, atomic_cfg.agent.gap_window);
    v.details.push_back("optimal-value gap over the last 5 states before the goal: atomic " + num(oa) +
                        ", with repetition-5 macros " + num(om));
    out.push_back(v);
  }
  {
    Verdict v{9, "frequency-5 final-epoch deviation across seeds <= atomic", false, {}};
    const double fd = analysis::sample_std(freq.final_returns);
    const double ad = analysis::sample_std(atomic.final_returns);
    v.pass = freq.final_returns.size() == 10 && atomic.final_returns.size() == 10 && fd <= ad;
    v.details.push_back("frequency5 final returns [" + list(freq.final_returns) + "], deviation " + num(fd));
    v.details.push_back("atomic final returns [" + list(atomic.final_returns) + "], deviation " + num(ad));
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- 10

Verdict lifecycle() {
  Verdict v{10, "replacement lifecycle with K={2,5}", false, {}};
  qlearn::AgentConfig config;
  config.gamma = 0.9;
  config.alpha = 0.1;
  config.epochs = 6;
  config.epoch_length = 400;
  config.eval_steps = 50;
  config.batch = 8;
  config.seed = 11;
  config.replacement_epochs = {2, 5};
  const macros::MacroPolicyConfig policy{macros::MacroKind::frequency, 3, 0, 0.8};

  std::vector<std::vector<ActionId>> since(1);
  std::vector<std::vector<ActionId>> all(1);
  std::size_t event_count = 0;
  bool trace_ok = true;
  bool differs_from_full = false;
  qlearn::TrainHooks hooks;
  hooks.on_decision = [&](const Transition& t, const std::vector<ActionId>& executed, const ActionSet&) {
    for (auto* segs : {&since, &all}) {
      segs->back().insert(segs->back().end(), executed.begin(), executed.end());
      if (t.terminal || t.truncated) segs->emplace_back();
    }
  };
  hooks.on_replacement = [&](const qlearn::MacroEvent& ev) {
    ++event_count;
    std::size_t n = 0;
    for (const auto& s : since) n += s.size();
    const auto expected = macros::frequency_report(since, 3, 2, 0.8).macros;
    trace_ok = trace_ok && ev.trace_size == n && ev.proposed == expected;
    if (ev.epoch == 5) {
      std::size_t total = 0;
      for (const auto& s : all) total += s.size();
      differs_from_full = total > n;
    }
    since.assign(1, {});
  };
  envs::ChainEnv env(8);
  ActionSet set = ActionSet::from_labels(env.action_labels());
  qlearn::TabularQ q(env.state_count(), set.output_arity());
  qlearn::TrainOptions opts;
  opts.hooks = hooks;
  const auto result = qlearn::train_phase(env, set, q, config, policy, opts);

  std::vector<std::size_t> event_rows;
  bool eps_ok = true;
  for (const auto& row : result.metrics) {
    if (!row.macro_event) continue;
    event_rows.push_back(row.epoch);
    eps_ok = eps_ok && row.epsilon == 0.5;
  }
  for (const auto& ev : result.history) eps_ok = eps_ok && ev.epsilon_after == 0.5;
  const bool rows_ok = event_rows == std::vector<std::size_t>{2, 5} && event_count == 2;

  // replacement examples: fill-and-disable, cut-off, empty list
  ActionSet three = ActionSet::from_labels({"a", "b", "c"});
  const auto r1 = macros::replace_macros(three, {MacroDef::of({0, 1}), MacroDef::of({1, 2})});
  const bool fill = r1.installed == 2 && three.slot(0).sequence == std::vector<ActionId>{0, 1} &&
                    three.slot(1).sequence == std::vector<ActionId>{1, 2} && !three.slot(2).enabled &&
                    three.slot(2).sequence.empty() && three.output_arity() == 6;
  const auto r2 = macros::replace_macros(
      three, {MacroDef::of({2, 2}), MacroDef::of({0, 0}), MacroDef::of({1, 1}), MacroDef::of({0, 2})});
  const bool cut = r2.installed == 3 && r2.discarded == 1 && three.slot(2).sequence == std::vector<ActionId>{1, 1} &&
                   three.enabled_count() == 6;
  const auto r3 = macros::replace_macros(three, {});
  const bool empty = r3.disabled == 3 && three.enabled_count() == 3 && three.output_arity() == 6;

  v.pass = rows_ok && eps_ok && trace_ok && differs_from_full && fill && cut && empty;
  std::string rows;
  for (auto e : event_rows) rows += (rows.empty() ? "" : ",") + std::to_string(e);
  v.details.push_back("macro_event rows at epochs {" + rows + "}, epsilon 0.5 after each: " + (eps_ok ? "yes" : "no"));
  v.details.push_back(std::string("discovery input equals actions since the previous event: ") +
                      (trace_ok ? "yes" : "no") + " (epoch 5 saw " +
                      std::to_string(result.history.size() == 2 ? result.history[1].trace_size : 0) +
                      " actions)");
  v.details.push_back(std::string("replace examples: fill-and-disable ") + (fill ? "ok" : "FAIL") + ", cut-off " +
                      (cut ? "ok" : "FAIL") + ", empty list " + (empty ? "ok" : "FAIL"));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = Clock::now();
  const fs::path out_dir = argc > 1 ? fs::path(argv[1]) : fs::current_path() / "acceptance_runs";
  fs::create_directories(out_dir);

  std::vector<Verdict> verdicts;
  auto guarded = [&](int id, const std::string& title, const std::function<std::vector<Verdict>()>& fn) {
    try {
      for (auto& v : fn()) verdicts.push_back(std::move(v));
    } catch (const std::exception& e) {
      verdicts.push_back({id, title, false, {std::string("threw: ") + e.what()}});
    }
  };
  guarded(1, "oracle convergence", [] { return std::vector{oracle_convergence()}; });
  guarded(2, "flattening", [] { return std::vector{flattening()}; });
  guarded(3, "single-step reduction", [] { return std::vector{single_step_reduction()}; });
  guarded(4, "frequency oracle", [] { return std::vector{frequency_oracle()}; });
  guarded(5, "gradient check", [] { return std::vector{gradient_check()}; });
  guarded(10, "lifecycle", [] { return std::vector{lifecycle()}; });
  guarded(6, "chain experiments", [&] { return chain_experiments(out_dir, start); });

  std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
  int failures = 0;
  for (const auto& v : verdicts) {
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << v.id << "  " << v.title << '\n';
    for (const auto& d : v.details) std::cout << "          " << d << '\n';
    failures += v.pass ? 0 : 1;
  }
  std::cout << verdicts.size() - static_cast<std::size_t>(failures) << "/" << verdicts.size()
            << " criteria passed in " << num(seconds_since(start)) << " s; run artifacts in " << out_dir.string()
            << '\n';
  return failures == 0 ? 0 : 1;
}
