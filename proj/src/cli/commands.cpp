#include "macrorl/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "macrorl/cli/experiment.hpp"
#include "macrorl/core/errors.hpp"
#include "macrorl/core/macro_io.hpp"
#include "macrorl/macros/constructors.hpp"

namespace macrorl::cli {

namespace {

std::string output_dir(const ExperimentConfig& config, const std::optional<std::string>& flag) {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  if (flag) return *flag;
  return config.output;
}

ExperimentConfig load_with_seed(const std::string& path, const std::optional<std::uint64_t>& seed) {
  ExperimentConfig c = load_experiment(path);
  if (seed) {
    c.seed = *seed;
    c.agent.seed = *seed;
  }
  return c;
}

std::string join_ids(const std::vector<ActionId>& seq, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && labels.empty()) s += ' ';
    s += labels.empty() ? std::to_string(seq[i]) : labels[seq[i]];
  }
  return s;
}

}  // namespace

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    config = load_with_seed(args.config, args.seed);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    const auto outcome = run_experiment(config);
    const std::string dir = output_dir(config, args.output);
    write_experiment(outcome, dir);
    std::size_t failed = 0;
    for (const auto& t : outcome.trials) {
      if (!t.ok) {
        ++failed;
        err << "trial " << t.trial << " failed: " << t.failure << '\n';
      }
    }
    out << "wrote " << config.trials - failed << "/" << config.trials << " trials to " << dir << '\n';
    if (!outcome.curves.empty()) {
      out << "final epoch mean return " << analysis::format_number(outcome.curves.back().mean) << '\n';
    }
    return failed == 0 ? kExitOk : kExitRuntime;
  } catch (const Error& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<ExperimentConfig> configs;
  try {
    for (const auto& path : args.configs) configs.push_back(load_with_seed(path, args.seed));
    check_comparable(configs);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    double threshold = 0.0;
    if (args.threshold) {
      threshold = *args.threshold;
    } else {
      const auto best = optimal_return(configs.front());
      if (!best) {
        err << "config error: environment has no exact optimum; pass --threshold\n";
        return kExitConfig;
      }
      threshold = args.threshold_fraction * *best;
    }

    const std::string root = output_dir(configs.front(), args.output);
    std::vector<ExperimentOutcome> outcomes;
    bool failed = false;
    for (const auto& c : configs) {
      outcomes.push_back(run_experiment(c));
      write_experiment(outcomes.back(), std::filesystem::path(root) / c.name);
      failed = failed || !outcomes.back().all_ok();
    }
    const auto cmp = summarize(outcomes, threshold);
    std::ofstream csv(std::filesystem::path(root) / "comparison.csv", std::ios::binary);
    write_comparison_csv(csv, cmp);
    print_comparison(out, cmp);
    return failed ? kExitRuntime : kExitOk;
  } catch (const Error& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

std::vector<std::vector<ActionId>> parse_trace(std::istream& in, std::size_t action_count) {
  std::vector<std::vector<ActionId>> episodes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<ActionId> ep;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' && line[i] != '\r') ++i;
      const std::string tok = line.substr(start, i - start);
      const bool numeric = tok.find_first_not_of("0123456789") == std::string::npos;
      if (!numeric || std::stoull(tok) >= action_count) {
        throw Error("unknown action id '" + tok + "' at line " + std::to_string(lineno) + ", column " +
                    std::to_string(start + 1));
      }
      ep.push_back(static_cast<ActionId>(std::stoull(tok)));
    }
    if (!ep.empty()) episodes.push_back(std::move(ep));
  }
  return episodes;
}

int cmd_discover(const DiscoverArgs& args, std::ostream& out, std::ostream& err) {
  std::size_t action_count = args.action_count;
  if (action_count == 0) action_count = args.labels.size();
  if (action_count == 0) {
    err << "config error: give --actions or --labels\n";
    return kExitConfig;
  }
  if (!args.labels.empty() && args.labels.size() != action_count) {
    err << "config error: --labels has " << args.labels.size() << " names for " << action_count << " actions\n";
    return kExitConfig;
  }
  if (args.length < 2 || args.capacity < 1 || !(args.omega > 0.0 && args.omega <= 1.0)) {
    err << "config error: need length >= 2, capacity >= 1 and omega in (0, 1]\n";
    return kExitConfig;
  }

  std::vector<std::vector<ActionId>> episodes;
  try {
    std::ifstream in(args.trace);
    if (!in) throw Error("cannot open trace " + args.trace);
    episodes = parse_trace(in, action_count);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  const auto report = macros::frequency_report(episodes, args.length, args.capacity, args.omega);
  std::vector<std::string> labels = args.labels;
  if (labels.empty()) {
    for (std::size_t i = 0; i < action_count; ++i) labels.push_back(std::to_string(i));
  }
  const ActionSet set = ActionSet::from_labels(labels, args.capacity);

  if (report.ranking.empty()) {
    out << "no windows: every episode is shorter than length " << args.length << '\n';
    if (args.output) std::ofstream(*args.output, std::ios::binary);
    return kExitOk;
  }
  {
    out << "threshold omega*length = " << std::setprecision(6) << report.threshold << '\n';
    out << std::left << std::setw(6) << "rank" << std::setw(24) << "sequence" << std::setw(8) << "count"
        << "status\n";
    for (std::size_t r = 0; r < report.ranking.size(); ++r) {
      const auto& w = report.ranking[r];
      std::string status;
      if (!w.considered) status = "not considered (capacity reached)";
      else if (w.admitted) status = "admitted";
      else status = "rejected: lcs " + std::to_string(w.lcs_value) + " with " +
                    join_ids(report.macros[*w.blocked_by].sequence, args.labels);
      out << std::left << std::setw(6) << r + 1 << std::setw(24) << join_ids(w.sequence, args.labels)
          << std::setw(8) << w.count << status << '\n';
    }
  }

  const auto records = slot_records(report.macros, set);
  if (args.output) {
    std::ofstream f(*args.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *args.output << '\n';
      return kExitRuntime;
    }
    write_macro_lines(f, records);
  } else {
    write_macro_lines(out, records);
  }
  return kExitOk;
}

}  // namespace macrorl::cli
