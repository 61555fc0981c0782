#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "macrorl/core/errors.hpp"
#include "macrorl/envs/catch.hpp"
#include "macrorl/envs/chain.hpp"
#include "macrorl/envs/gridworld.hpp"

using namespace macrorl;
using namespace macrorl::envs;

namespace {

struct Stream {
  std::vector<Observation> obs;
  std::vector<double> rewards;
  bool operator==(const Stream&) const = default;
};

Stream replay(Environment& env, std::uint64_t seed, const std::vector<ActionId>& actions) {
  Stream s;
  s.obs.push_back(env.reset(seed));
  for (ActionId a : actions) {
    if (env.done()) s.obs.push_back(env.reset(seed + s.obs.size()));
    const auto out = env.step(a);
    s.obs.push_back(out.observation);
    s.rewards.push_back(out.reward);
  }
  return s;
}

void check_determinism(const Environment& proto) {
  std::mt19937_64 rng(123);
  for (int k = 0; k < 100; ++k) {
    std::vector<ActionId> actions(60);
    for (auto& a : actions) a = std::uniform_int_distribution<ActionId>(0, proto.action_count() - 1)(rng);
    auto e1 = proto.clone();
    auto e2 = proto.clone();
    e1->set_emit_features(true);
    e2->set_emit_features(true);
    const std::uint64_t seed = rng();
    ASSERT_EQ(replay(*e1, seed, actions), replay(*e2, seed, actions));
  }
}

void check_table_matches_simulation(EnumerableEnvironment& env) {
  const auto table = env.transition_table();
  for (const auto& [key, entry] : table) {
    env.reset_to(key.first);
    const auto out = env.step(key.second);
    EXPECT_EQ(out.observation.state, entry.next);
    EXPECT_EQ(out.reward, entry.reward);
    EXPECT_EQ(out.terminal, entry.terminal);
  }
  std::size_t nonterminal = 0;
  for (StateId s : env.states()) nonterminal += env.is_terminal_state(s) ? 0 : 1;
  EXPECT_EQ(table.size(), nonterminal * env.action_count());
}

}  // namespace

TEST(Chain, SmallestChainEndsOnFirstRight) {
  ChainEnv env(2);
  env.reset(0);
  const auto out = env.step(ChainEnv::kRight);
  EXPECT_TRUE(out.terminal);
  EXPECT_EQ(out.reward, 1.0);
}

TEST(Chain, LeftAtStartIsClampedAndPaysPenalty) {
  ChainEnv env(5, -0.25);
  env.reset(0);
  const auto out = env.step(ChainEnv::kLeft);
  EXPECT_EQ(out.observation.state, 0u);
  EXPECT_EQ(out.reward, -0.25);
  EXPECT_FALSE(out.done());
}

TEST(Chain, RejectsTooShort) { EXPECT_THROW(ChainEnv(1), EnvironmentError); }

TEST(Chain, StepAfterTerminalIsRejected) {
  ChainEnv env(2);
  env.reset(0);
  env.step(ChainEnv::kRight);
  EXPECT_THROW(env.step(ChainEnv::kRight), EnvironmentError);
  env.reset(0);
  EXPECT_NO_THROW(env.step(ChainEnv::kLeft));
}

TEST(Chain, EpisodeCapTruncates) {
  ChainEnv env(10);
  env.set_max_episode_steps(3);
  env.reset(0);
  env.step(ChainEnv::kLeft);
  env.step(ChainEnv::kLeft);
  const auto out = env.step(ChainEnv::kLeft);
  EXPECT_TRUE(out.truncated);
  EXPECT_FALSE(out.terminal);
  EXPECT_TRUE(env.done());
}

TEST(Chain, OneHotFeaturesWhenRequested) {
  ChainEnv env(4);
  EXPECT_TRUE(env.reset(0).features.empty());
  env.set_emit_features(true);
  env.reset(0);
  const auto out = env.step(ChainEnv::kRight);
  EXPECT_EQ(out.observation.features, (std::vector<double>{0, 1, 0, 0}));
}

TEST(Chain, TableAgreesWithSimulation) {
  ChainEnv env(7, -0.1);
  check_table_matches_simulation(env);
}

TEST(Gridworld, BorderMoveIsNoOp) {
  GridworldEnv env(3, 3, {}, {2, 2});
  env.reset(0);
  const auto out = env.step(GridworldEnv::kUp);
  EXPECT_EQ(out.observation.state, env.id_of({0, 0}));
  EXPECT_EQ(out.reward, 0.0);
}

TEST(Gridworld, OpenGridShortestPath) {
  GridworldEnv env(3, 3, {}, {2, 2});
  EXPECT_EQ(env.shortest_path_length(), 4u);
}

TEST(Gridworld, EnclosedGoalIsRejected) {
  EXPECT_THROW(GridworldEnv(3, 3, {{1, 2}, {2, 1}}, {2, 2}), EnvironmentError);
  EXPECT_THROW(GridworldEnv(3, 3, {{2, 2}}, {2, 2}), EnvironmentError);
}

TEST(Gridworld, WallsBlockMovement) {
  EXPECT_THROW(GridworldEnv(3, 1, {{1, 0}}, {0, 0}, {2, 0}), EnvironmentError);
  GridworldEnv open(3, 2, {{1, 0}}, {2, 0});
  open.reset(0);
  EXPECT_EQ(open.step(GridworldEnv::kRight).observation.state, open.id_of({0, 0}));
}

TEST(Gridworld, ParsesLayoutText) {
  std::istringstream in("S.#\n..G\n");
  auto env = GridworldEnv::parse(in);
  EXPECT_EQ(env.width(), 3u);
  EXPECT_EQ(env.height(), 2u);
  EXPECT_TRUE(env.is_wall({2, 0}));
  EXPECT_EQ(env.goal(), (Cell{2, 1}));
  EXPECT_EQ(env.shortest_path_length(), 3u);
}

TEST(Gridworld, LayoutErrorsNameTheProblem) {
  std::istringstream bad_char("S.x\n..G\n");
  EXPECT_THROW(GridworldEnv::parse(bad_char), EnvironmentError);
  std::istringstream no_goal("S..\n...\n");
  EXPECT_THROW(GridworldEnv::parse(no_goal), EnvironmentError);
  std::istringstream ragged("S..\n.G\n");
  EXPECT_THROW(GridworldEnv::parse(ragged), EnvironmentError);
}

TEST(Gridworld, TableAgreesWithSimulation) {
  std::istringstream in("S..#\n.#..\n...G\n");
  auto env = GridworldEnv::parse(in);
  check_table_matches_simulation(env);
}

TEST(Catch, EpisodeLastsGridMinusOneSteps) {
  CatchEnv env(5, 1);
  env.reset(3);
  int steps = 0;
  while (!env.done()) {
    env.step(CatchEnv::kStay);
    ++steps;
  }
  EXPECT_EQ(steps, 4);
}

TEST(Catch, CatchingPaysPlusOneAndMissingMinusOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CatchEnv env(5, 1);
    env.reset(seed);
    const std::size_t col = env.ball_col();
    StepOutcome out;
    while (!env.done()) {
      ActionId a = CatchEnv::kStay;
      if (env.paddle_col() < col) a = CatchEnv::kRight;
      if (env.paddle_col() > col) a = CatchEnv::kLeft;
      out = env.step(a);
    }
    EXPECT_TRUE(out.terminal);
    EXPECT_EQ(out.reward, 1.0);
  }
  CatchEnv env(7, 1);
  env.reset(0);
  const ActionId away = env.ball_col() >= 3 ? CatchEnv::kLeft : CatchEnv::kRight;
  StepOutcome out;
  while (!env.done()) out = env.step(away);
  EXPECT_EQ(out.reward, -1.0);
}

TEST(Catch, FirstObservationIsZeroPadded) {
  CatchEnv env(5, 4);
  env.set_emit_features(true);
  const auto obs = env.reset(9);
  ASSERT_EQ(obs.features.size(), 4u * 25u);
  for (std::size_t i = 0; i < 3 * 25; ++i) ASSERT_EQ(obs.features[i], 0.0);
  double current = 0.0;
  for (std::size_t i = 3 * 25; i < 4 * 25; ++i) current += obs.features[i];
  EXPECT_EQ(current, 2.0);  // ball and paddle
  EXPECT_EQ(obs.features[3 * 25 + env.ball_col()], 1.0);
}

TEST(Catch, FramesShiftOldestFirst) {
  CatchEnv env(5, 2);
  env.set_emit_features(true);
  const auto first = env.reset(4);
  const auto second = env.step(CatchEnv::kStay).observation;
  // the previous current frame moved into the older position
  EXPECT_TRUE(std::equal(first.features.begin() + 25, first.features.end(), second.features.begin()));
}

TEST(Catch, RejectsSmallGrid) {
  EXPECT_THROW(CatchEnv(4, 1), EnvironmentError);
  EXPECT_THROW(CatchEnv(5, 0), EnvironmentError);
}

TEST(Determinism, ChainReplaysBitwise) { check_determinism(ChainEnv(8)); }
TEST(Determinism, GridworldReplaysBitwise) { check_determinism(GridworldEnv(4, 4, {{1, 1}}, {3, 3})); }
TEST(Determinism, CatchReplaysBitwise) { check_determinism(CatchEnv(6, 3)); }
