#include "macrorl/core/replay_buffer.hpp"

#include <algorithm>
#include <string>

#include "macrorl/core/errors.hpp"

namespace macrorl {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw Error("replay capacity must be positive");
  entries_.reserve(std::min<std::size_t>(capacity, 1 << 16));
}

void ReplayBuffer::push(Transition t) {
  if (entries_.size() < capacity_) {
    entries_.push_back(std::move(t));
    return;
  }
  entries_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

const Transition& ReplayBuffer::operator[](std::size_t i) const {
  if (i >= entries_.size()) throw OutputIndexError("replay index out of range");
  return entries_[(head_ + i) % entries_.size()];
}

std::vector<std::size_t> ReplayBuffer::sample_indices(std::size_t batch, std::mt19937_64& rng) const {
  if (entries_.size() < batch || batch == 0) {
    throw UnderfilledBufferError("replay holds " + std::to_string(entries_.size()) +
                                 " transitions, batch of " + std::to_string(batch) + " requested");
  }
  std::uniform_int_distribution<std::size_t> pick(0, entries_.size() - 1);
  std::vector<std::size_t> out(batch);
  for (auto& i : out) i = pick(rng);
  return out;
}

std::vector<Transition> ReplayBuffer::sample(std::size_t batch, std::mt19937_64& rng) const {
  std::vector<Transition> out;
  out.reserve(batch);
  for (std::size_t i : sample_indices(batch, rng)) out.push_back((*this)[i]);
  return out;
}

void ReplayBuffer::clear() noexcept {
  entries_.clear();
  head_ = 0;
}

}  // namespace macrorl
