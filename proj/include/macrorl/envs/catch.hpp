#pragma once

#include <deque>

#include "macrorl/envs/environment.hpp"

namespace macrorl::envs {

/// Ball falls one row per step from a seeded random top column; a one-cell
/// paddle on the bottom row moves {left, stay, right}. When the ball reaches
/// the bottom row the episode ends with +1 for a catch and -1 for a miss, so
/// an episode is exactly `grid - 1` steps. Observations stack the last
/// `frames` binary frames, oldest first, zero-padded at episode start.
class CatchEnv final : public Environment {
 public:
  static constexpr ActionId kLeft = 0;
  static constexpr ActionId kStay = 1;
  static constexpr ActionId kRight = 2;

  CatchEnv(std::size_t grid, std::size_t frames);

  std::string name() const override { return "catch"; }
  std::size_t action_count() const override { return 3; }
  std::vector<std::string> action_labels() const override { return {"L", "S", "R"}; }
  /// Encodes (ball row, ball column, paddle column).
  std::size_t state_count() const override { return grid_ * grid_ * grid_; }
  std::size_t feature_dim() const override { return grid_ * grid_ * frames_; }
  std::unique_ptr<Environment> clone() const override { return std::make_unique<CatchEnv>(*this); }

  std::size_t grid() const noexcept { return grid_; }
  std::size_t frames() const noexcept { return frames_; }
  std::size_t ball_row() const noexcept { return ball_row_; }
  std::size_t ball_col() const noexcept { return ball_col_; }
  std::size_t paddle_col() const noexcept { return paddle_; }

 protected:
  StateId on_reset(std::uint64_t seed) override;
  Advance on_step(ActionId action) override;
  void fill_features(std::vector<double>& out) const override;

 private:
  StateId encode() const noexcept { return (ball_row_ * grid_ + ball_col_) * grid_ + paddle_; }
  void push_frame();

  std::size_t grid_;
  std::size_t frames_;
  std::size_t ball_row_ = 0;
  std::size_t ball_col_ = 0;
  std::size_t paddle_ = 0;
  std::deque<std::vector<double>> history_;  // most recent last
};

}  // namespace macrorl::envs
