#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "tourney/algorithms.hpp"
#include "tourney/oracle.hpp"

namespace tourney {

/// Matches chosen for one parallel unfold.
///
/// `pairs[0, scheduled)` are elimination matches, `pairs[scheduled, size)`
/// padding added by fill_batch_heuristic whose results only feed the cache.
/// `known` holds matches whose outcome the cache already had; they are played
/// without taking a batch slot.
struct BatchPlan {
  struct Known {
    PlayerPair pair;
    PlayerId winner;
  };

  std::vector<PlayerPair> pairs;
  std::size_t scheduled = 0;
  std::vector<Known> known;

  [[nodiscard]] bool empty() const noexcept { return pairs.empty() && known.empty(); }
};

/// Per-player record of every arc unfolded so far, shared by the padding
/// heuristic and the final brute force. Grows monotonically over a run.
class ArcLedger {
 public:
  explicit ArcLedger(std::size_t n) : unfolded_(n), cursor_(n, 0) {}

  void record(PlayerId u, PlayerId v);
  [[nodiscard]] bool unfolded(PlayerId u, PlayerId v) const {
    return unfolded_[u.index].contains(v.index);
  }
  /// Smallest opponent w with {u, w} neither unfolded nor in `reserved`.
  [[nodiscard]] std::optional<PlayerId> next_unprobed(PlayerId u,
                                                      const std::unordered_set<std::uint64_t>& reserved);
  [[nodiscard]] std::size_t size() const noexcept { return unfolded_.size(); }

 private:
  std::vector<std::unordered_set<std::uint32_t>> unfolded_;
  // Everything below cursor_[u] is unfolded or u itself.
  std::vector<std::uint32_t> cursor_;
};

/// Alive set, loss counters and played pairs of one alpha-round of the
/// batched elimination, plus the effective batch size.
///
/// Speculative losses applied while building a batch live in an overlay that
/// is logged and rolled back, so the global structures are never copied.
class BatchState {
 public:
  BatchState(std::size_t n, std::uint64_t alpha, std::size_t batch_size);

  [[nodiscard]] std::size_t size() const noexcept { return lost_.size(); }
  [[nodiscard]] std::uint64_t alpha() const noexcept { return alpha_; }
  [[nodiscard]] std::size_t batch_size() const noexcept { return batch_size_; }
  [[nodiscard]] std::size_t effective_batch_size() const noexcept { return effective_; }
  [[nodiscard]] std::size_t num_alive() const noexcept { return num_alive_; }
  [[nodiscard]] bool alive(PlayerId u) const noexcept { return alive_[u.index] != 0; }
  [[nodiscard]] std::uint64_t lost(PlayerId u) const noexcept { return lost_[u.index]; }
  [[nodiscard]] std::vector<PlayerId> alive_players() const;

  /// Halves the effective batch size while num_alive < 2 B' + 2 alpha (never
  /// below 1). Returns true if it halved at least once.
  bool halve_while_needed();

  /// Charges a loss to v and removes it once it reaches alpha. Throws
  /// Error(internal) if v is not alive.
  void increase_loss(PlayerId v);

  [[nodiscard]] bool played(PlayerId u, PlayerId v) const { return played_.contains(pair_key(u, v)); }
  void mark_played(PlayerId u, PlayerId v) { played_.insert(pair_key(u, v)); }

 private:
  friend BatchPlan build_batch(BatchState&, const ComparisonOracle*);

  [[nodiscard]] std::uint32_t end() const noexcept { return static_cast<std::uint32_t>(lost_.size()); }
  [[nodiscard]] std::uint32_t next_alive(std::uint32_t node) const noexcept;
  [[nodiscard]] std::uint32_t first_alive() const noexcept;
  [[nodiscard]] bool locally_alive(std::uint32_t u) const noexcept;
  void speculate(std::uint32_t u);
  void rollback();

  std::uint64_t alpha_;
  std::size_t batch_size_;
  std::size_t effective_;
  std::size_t num_alive_;
  std::vector<std::uint64_t> lost_;
  std::vector<std::uint8_t> alive_;
  // Order-preserving list; dead nodes keep their forward link so a cursor
  // parked on one can still advance.
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::uint32_t head_;
  std::unordered_set<std::uint64_t> played_;
  std::vector<std::uint64_t> overlay_;
  std::vector<std::uint32_t> overlay_log_;
  std::uint32_t cursor_first_;
  std::uint32_t cursor_second_;
};

/// Chooses up to B' fresh matches among players that would still be alive if
/// every match already in the batch were lost by both sides. Each chosen pair
/// is marked played. When `known` is given, pairs it has cached are returned
/// in `plan.known` instead of taking a slot. Global alive/lost are unchanged
/// on return.
BatchPlan build_batch(BatchState& state, const ComparisonOracle* known = nullptr);

/// Pads `plan` up to `batch_size` pairs: repeatedly takes the player with the
/// fewest losses this round (ties by index) that still has un-probed arcs and
/// appends those arcs in opponent order. Stops when full or when every arc
/// has been unfolded.
BatchPlan fill_batch_heuristic(const BatchState& state, BatchPlan plan, std::size_t batch_size,
                               ArcLedger& ledger);

enum class BruteForceMode {
  /// Stop expanding a candidate once it has alpha losses; it can no longer
  /// win this round.
  capped,
  /// Unfold every arc incident to every candidate.
  exhaustive,
};

struct BatchedOptions {
  std::size_t batch_size = 1;
  bool memoize = true;
  /// Pad partial batches; only applies when memoize is on.
  bool batch_fill = true;
  BruteForceMode brute_force = BruteForceMode::capped;
};

struct RoundBatchCalls {
  std::uint64_t alpha = 0;
  std::uint64_t elimination_calls = 0;
  std::uint64_t brute_force_calls = 0;
};

struct BatchDiagnostics {
  std::uint64_t elimination_calls = 0;
  std::uint64_t brute_force_calls = 0;
  /// Iterations after the first halving where 2B' + 2a <= |A| <= 4B' + 2a
  /// failed. Only checked when the batch size is a power of two.
  std::uint64_t halving_window_violations = 0;
  /// Times a loss counter exceeded alpha.
  std::uint64_t loss_cap_violations = 0;
  /// Batched results whose loser had already been eliminated.
  std::uint64_t discarded_results = 0;
  std::vector<RoundBatchCalls> per_round;
};

struct BatchedReport : ChampionReport {
  BatchDiagnostics diagnostics;
};

/// Champion search issuing lookups in parallel batches of up to B arcs, with
/// O(l n / B + l log B) batch calls. Throws Error(invalid_batch_size) if B < 1.
BatchedReport find_champions_batched(ComparisonOracle& oracle, const BatchedOptions& options);

}  // namespace tourney
