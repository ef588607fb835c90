#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/oracle.hpp"

namespace tourney {

/// Alive players kept in the prefix [0, size()) of an array. Removal swaps the
/// player with the last alive one, so input order is not preserved.
///
/// The two cursors pair A[first] with every A[second], second > first. When
/// the player at `first` dies its series ends and a new one starts at the
/// same position with whoever was swapped in.
class SwapAliveSet {
 public:
  explicit SwapAliveSet(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return num_alive_; }
  [[nodiscard]] bool contains(PlayerId u) const noexcept { return pos_[u.index] < num_alive_; }
  [[nodiscard]] std::vector<PlayerId> players() const;

  /// Pair under the cursors, or nullopt once this pass has no pairs left.
  [[nodiscard]] std::optional<PlayerPair> current();
  void skip() noexcept { ++second_; }
  void after_match(bool first_dead, bool second_dead);
  void wrap() noexcept {
    first_ = 0;
    second_ = 1;
  }

 private:
  void remove_at(std::size_t slot);

  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> pos_;
  std::size_t num_alive_;
  std::size_t first_ = 0;
  std::size_t second_ = 1;
};

/// Alive players in a doubly linked list that keeps input order. Cursors only
/// move forward; when the second one falls off the end, the first advances.
class LinkedAliveSet {
 public:
  explicit LinkedAliveSet(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return num_alive_; }
  [[nodiscard]] bool contains(PlayerId u) const noexcept { return alive_[u.index] != 0; }
  [[nodiscard]] std::vector<PlayerId> players() const;

  [[nodiscard]] std::optional<PlayerPair> current();
  void skip() noexcept { second_ = next_[second_]; }
  void after_match(bool first_dead, bool second_dead);
  void wrap() noexcept;

 private:
  [[nodiscard]] std::uint32_t end() const noexcept { return static_cast<std::uint32_t>(alive_.size()); }
  void unlink(std::uint32_t node);

  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint8_t> alive_;
  std::uint32_t head_;
  std::size_t num_alive_;
  std::uint32_t first_;
  std::uint32_t second_;
};

}  // namespace tourney
