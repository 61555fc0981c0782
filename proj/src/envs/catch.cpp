#include "macrorl/envs/catch.hpp"

#include <algorithm>
#include <random>

#include "macrorl/core/errors.hpp"

namespace macrorl::envs {

CatchEnv::CatchEnv(std::size_t grid, std::size_t frames) : grid_(grid), frames_(frames) {
  if (grid < 5) throw EnvironmentError("catch grid must be at least 5");
  if (frames < 1) throw EnvironmentError("catch needs at least one frame");
}

StateId CatchEnv::on_reset(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ball_col_ = std::uniform_int_distribution<std::size_t>(0, grid_ - 1)(rng);
  ball_row_ = 0;
  paddle_ = grid_ / 2;
  history_.clear();
  push_frame();
  return encode();
}

Environment::Advance CatchEnv::on_step(ActionId action) {
  if (action == kLeft && paddle_ > 0) --paddle_;
  if (action == kRight && paddle_ + 1 < grid_) ++paddle_;
  ++ball_row_;
  push_frame();
  if (ball_row_ + 1 == grid_) return {encode(), ball_col_ == paddle_ ? 1.0 : -1.0, true};
  return {encode(), 0.0, false};
}

void CatchEnv::push_frame() {
  std::vector<double> frame(grid_ * grid_, 0.0);
  frame[ball_row_ * grid_ + ball_col_] = 1.0;
  frame[(grid_ - 1) * grid_ + paddle_] = 1.0;
  history_.push_back(std::move(frame));
  while (history_.size() > frames_) history_.pop_front();
}

void CatchEnv::fill_features(std::vector<double>& out) const {
  const std::size_t frame_size = grid_ * grid_;
  const std::size_t pad = frames_ - history_.size();
  for (std::size_t i = 0; i < history_.size(); ++i) {
    std::copy(history_[i].begin(), history_[i].end(), out.begin() + (pad + i) * frame_size);
  }
}

}  // namespace macrorl::envs
