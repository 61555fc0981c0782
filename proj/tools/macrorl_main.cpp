#include <iostream>

#include <CLI11.hpp>

#include "macrorl/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace macrorl::cli;

  CLI::App app{"Q-learning with open-loop macro-actions"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "run seeded trials of one configuration");
  train_cmd->add_option("--config", train.config, "experiment config file")->required();
  train_cmd->add_option("--seed", train.seed, "override the config seed base");
  train_cmd->add_option("--output", train.output, "output directory");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "run several variants on one environment and tabulate");
  compare_cmd->add_option("--config", compare.configs, "variant config (repeatable)")->required();
  compare_cmd->add_option("--seed", compare.seed, "override every config's seed base");
  compare_cmd->add_option("--output", compare.output, "output directory");
  compare_cmd->add_option("--threshold-fraction", compare.threshold_fraction,
                          "steps-to-threshold uses this fraction of the optimal return");
  compare_cmd->add_option("--threshold", compare.threshold, "absolute return threshold");

  DiscoverArgs discover;
  auto* discover_cmd = app.add_subcommand("discover", "rank frequent action windows of a trace file");
  discover_cmd->add_option("--trace", discover.trace, "trace file, one episode per line")->required();
  discover_cmd->add_option("--length", discover.length, "macro length");
  discover_cmd->add_option("--capacity", discover.capacity, "number of macro slots");
  discover_cmd->add_option("--omega", discover.omega, "overlap threshold");
  discover_cmd->add_option("--actions", discover.action_count, "number of atomic actions");
  discover_cmd->add_option("--labels", discover.labels, "action names in id order")->delimiter(',');
  discover_cmd->add_option("--output", discover.output, "write macro JSON-lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*train_cmd) return cmd_train(train, std::cout, std::cerr);
  if (*compare_cmd) return cmd_compare(compare, std::cout, std::cerr);
  return cmd_discover(discover, std::cout, std::cerr);
}
