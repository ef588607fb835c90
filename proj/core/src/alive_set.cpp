#include "tourney/alive_set.hpp"

#include <numeric>
#include <utility>

namespace tourney {

SwapAliveSet::SwapAliveSet(std::size_t n) : order_(n), pos_(n), num_alive_(n) {
  std::iota(order_.begin(), order_.end(), 0u);
  std::iota(pos_.begin(), pos_.end(), std::size_t{0});
}

std::vector<PlayerId> SwapAliveSet::players() const {
  std::vector<PlayerId> out;
  out.reserve(num_alive_);
  for (std::size_t i = 0; i < num_alive_; ++i) out.emplace_back(order_[i]);
  return out;
}

std::optional<PlayerPair> SwapAliveSet::current() {
  while (first_ + 1 < num_alive_) {
    if (second_ < num_alive_) return PlayerPair{PlayerId(order_[first_]), PlayerId(order_[second_])};
    ++first_;
    second_ = first_ + 1;
  }
  return std::nullopt;
}

void SwapAliveSet::remove_at(std::size_t slot) {
  const std::size_t last = num_alive_ - 1;
  std::swap(order_[slot], order_[last]);
  pos_[order_[slot]] = slot;
  pos_[order_[last]] = last;
  --num_alive_;
}

void SwapAliveSet::after_match(bool first_dead, bool second_dead) {
  // The swapped-in player at `second_` has not met A[first_] yet, so the
  // cursor stays put.
  if (second_dead) {
    remove_at(second_);
  } else {
    ++second_;
  }
  if (first_dead) {
    remove_at(first_);
    second_ = first_ + 1;
  }
}

LinkedAliveSet::LinkedAliveSet(std::size_t n)
    : next_(n), prev_(n), alive_(n, 1), head_(0), num_alive_(n) {
  const auto sentinel = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    next_[i] = i + 1;
    prev_[i] = i == 0 ? sentinel : i - 1;
  }
  if (n == 0) head_ = sentinel;
  first_ = head_;
  second_ = n > 1 ? 1 : sentinel;
}

std::vector<PlayerId> LinkedAliveSet::players() const {
  std::vector<PlayerId> out;
  out.reserve(num_alive_);
  for (std::uint32_t u = head_; u != end(); u = next_[u]) out.emplace_back(u);
  return out;
}

std::optional<PlayerPair> LinkedAliveSet::current() {
  while (first_ != end()) {
    if (second_ != end()) return PlayerPair{PlayerId(first_), PlayerId(second_)};
    first_ = next_[first_];
    second_ = first_ == end() ? end() : next_[first_];
  }
  return std::nullopt;
}

void LinkedAliveSet::unlink(std::uint32_t node) {
  const std::uint32_t p = prev_[node];
  const std::uint32_t q = next_[node];
  if (p == end()) {
    head_ = q;
  } else {
    next_[p] = q;
  }
  if (q != end()) prev_[q] = p;
  alive_[node] = 0;
  --num_alive_;
}

void LinkedAliveSet::after_match(bool first_dead, bool second_dead) {
  if (second_dead) {
    const std::uint32_t following = next_[second_];
    unlink(second_);
    second_ = following;
  } else {
    second_ = next_[second_];
  }
  if (first_dead) {
    const std::uint32_t following = next_[first_];
    unlink(first_);
    first_ = following;
    second_ = first_ == end() ? end() : next_[first_];
  }
}

void LinkedAliveSet::wrap() noexcept {
  first_ = head_;
  second_ = first_ == end() ? end() : next_[first_];
}

}  // namespace tourney
