#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "macrorl/core/transition.hpp"

namespace macrorl {

/// Fixed-capacity FIFO ring of transitions with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// i-th entry counted from the oldest.
  const Transition& operator[](std::size_t i) const;

  /// Uniform draws with replacement. Throws UnderfilledBufferError when the
  /// buffer holds fewer than `batch` entries.
  std::vector<std::size_t> sample_indices(std::size_t batch, std::mt19937_64& rng) const;
  std::vector<Transition> sample(std::size_t batch, std::mt19937_64& rng) const;

  void clear() noexcept;

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // next write position once full
  std::vector<Transition> entries_;
};

}  // namespace macrorl
