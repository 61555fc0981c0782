#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "macrorl/envs/environment.hpp"

namespace macrorl::envs {

struct Cell {
  std::size_t x = 0;
  std::size_t y = 0;  // row, 0 is the top

  auto operator<=>(const Cell&) const = default;
};

/// Four-connected grid. Bumping a wall or the border is a no-op. Entering the
/// goal pays 1 and ends the episode; all other steps pay 0. State ids are
/// y * width + x.
class GridworldEnv final : public EnumerableEnvironment {
 public:
  static constexpr ActionId kUp = 0;
  static constexpr ActionId kDown = 1;
  static constexpr ActionId kLeft = 2;
  static constexpr ActionId kRight = 3;

  /// Throws EnvironmentError when the goal sits in a wall, cells fall outside
  /// the grid, or the goal cannot be reached from the start.
  GridworldEnv(std::size_t width, std::size_t height, std::set<Cell> walls, Cell goal,
               Cell start = {0, 0});

  /// Layout text: `#` wall, `.` floor, `S` start, `G` goal, one row per line.
  static GridworldEnv parse(std::istream& in);
  static GridworldEnv load(const std::string& path);

  std::string name() const override { return "gridworld"; }
  std::size_t action_count() const override { return 4; }
  std::vector<std::string> action_labels() const override { return {"U", "D", "L", "R"}; }
  std::size_t state_count() const override { return width_ * height_; }
  std::size_t feature_dim() const override { return width_ * height_; }
  std::unique_ptr<Environment> clone() const override { return std::make_unique<GridworldEnv>(*this); }

  std::vector<StateId> states() const override;
  bool is_terminal_state(StateId s) const override { return s == id_of(goal_); }
  StateId start_state() const override { return id_of(start_); }
  TransitionTable transition_table() const override;

  StateId id_of(Cell c) const noexcept { return c.y * width_ + c.x; }
  Cell cell_of(StateId s) const noexcept { return {s % width_, s / width_}; }
  bool is_wall(Cell c) const { return walls_.count(c) > 0; }
  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  Cell goal() const noexcept { return goal_; }

  /// Breadth-first distance from start to goal in moves.
  std::size_t shortest_path_length() const;

 protected:
  StateId on_reset(std::uint64_t seed) override;
  Advance on_step(ActionId action) override;
  void fill_features(std::vector<double>& out) const override;
  void place(StateId s) override;

 private:
  Cell move(Cell c, ActionId a) const;
  std::vector<std::size_t> distances_from(Cell origin) const;

  std::size_t width_;
  std::size_t height_;
  std::set<Cell> walls_;
  Cell goal_;
  Cell start_;
  Cell agent_;
};

}  // namespace macrorl::envs
