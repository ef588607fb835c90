#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

struct PlayerPair {
  PlayerId first;
  PlayerId second;

  friend constexpr bool operator==(PlayerPair, PlayerPair) = default;
};

/// Order-independent 64-bit key of {u, v}.
inline constexpr std::uint64_t pair_key(PlayerId u, PlayerId v) noexcept {
  const auto lo = u.index < v.index ? u.index : v.index;
  const auto hi = u.index < v.index ? v.index : u.index;
  return (std::uint64_t{lo} << 32) | hi;
}

/// Lookups spent during one round of the exponential search.
struct AlphaCost {
  std::uint64_t alpha = 0;
  std::uint64_t comparisons = 0;

  friend bool operator==(const AlphaCost&, const AlphaCost&) = default;
};

struct LookupStats {
  std::uint64_t comparisons = 0;
  std::uint64_t inferences = 0;
  std::uint64_t batch_calls = 0;
  std::uint64_t cache_hits = 0;
  std::vector<AlphaCost> per_alpha;

  /// Counter-wise difference `*this - earlier`; per_alpha is left empty.
  [[nodiscard]] LookupStats since(const LookupStats& earlier) const;
};

/// Results of lookups keyed on unordered pairs. Not synchronized; the owning
/// oracle serializes access.
template <typename Value>
class BasicMemoCache {
 public:
  [[nodiscard]] std::optional<Value> find(PlayerId u, PlayerId v) const {
    auto it = entries_.find(pair_key(u, v));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  void store(PlayerId u, PlayerId v, Value value) { entries_.insert_or_assign(pair_key(u, v), value); }
  [[nodiscard]] bool contains(PlayerId u, PlayerId v) const {
    return entries_.contains(pair_key(u, v));
  }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  void clear() noexcept { entries_.clear(); }

 private:
  std::unordered_map<std::uint64_t, Value> entries_;
};

/// Cached winner of each resolved pair.
using MemoCache = BasicMemoCache<PlayerId>;

struct OracleOptions {
  /// One comparison costs two model inferences (pairwise models that score
  /// (u, v) and (v, u) separately).
  bool asymmetric = true;
  bool memoize = false;
};

/// Counters shared by the binary and probabilistic oracles. Updates are
/// atomic, so concurrent probes never lose counts.
class LookupCounter {
 public:
  explicit LookupCounter(bool asymmetric) : asymmetric_(asymmetric) {}

  [[nodiscard]] bool asymmetric() const noexcept { return asymmetric_; }
  [[nodiscard]] LookupStats stats() const;
  void reset_stats() noexcept;

 protected:
  void count_comparisons(std::uint64_t k) noexcept { comparisons_.fetch_add(k, std::memory_order_relaxed); }
  void count_cache_hit() noexcept { cache_hits_.fetch_add(1, std::memory_order_relaxed); }
  void count_batch_call() noexcept { batch_calls_.fetch_add(1, std::memory_order_relaxed); }

 private:
  bool asymmetric_;
  std::atomic<std::uint64_t> comparisons_{0};
  std::atomic<std::uint64_t> batch_calls_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
};

/// The only view algorithms have of a binary instance: the player count and
/// counted arc lookups.
///
/// probe and probe_batch may be called from several threads at once. The
/// memo cache is guarded by an internal mutex; counters are atomic.
/// set_memoize must not race with probes.
class ComparisonOracle : public LookupCounter {
 public:
  ComparisonOracle(std::size_t n, OracleOptions options);
  virtual ~ComparisonOracle() = default;

  ComparisonOracle(const ComparisonOracle&) = delete;
  ComparisonOracle& operator=(const ComparisonOracle&) = delete;

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// Winner of the match between u and v. Throws Error(invalid_pair) when
  /// u == v or either index is out of range.
  PlayerId probe(PlayerId u, PlayerId v);

  /// Resolves all pairs as one parallel unfold. Winners come back in input
  /// order and match what sequential probes would return. An empty batch is
  /// not a call.
  std::vector<PlayerId> probe_batch(std::span<const PlayerPair> pairs);

  /// Cached winner of {u, v}, if memoization is on and the pair was resolved.
  /// Costs nothing and is not counted.
  [[nodiscard]] std::optional<PlayerId> cached_winner(PlayerId u, PlayerId v) const;

  [[nodiscard]] bool memoize() const noexcept { return memoize_; }
  /// Turning memoization off drops the cache.
  void set_memoize(bool on);
  [[nodiscard]] std::size_t cache_size() const;

 protected:
  /// True iff u beats v in the hidden instance. Called without the cache lock
  /// held, possibly concurrently.
  [[nodiscard]] virtual bool first_wins(PlayerId u, PlayerId v) const = 0;

  /// Batched resolution hook for backends that evaluate many pairs at once.
  /// The default resolves pairs one by one.
  virtual void resolve_batch(std::span<const PlayerPair> pairs,
                             std::span<PlayerId> winners) const;

 private:
  void check_pair(PlayerId u, PlayerId v) const;

  std::size_t n_;
  bool memoize_;
  mutable std::mutex cache_mutex_;
  MemoCache cache_;
};

/// Oracle over a dense matrix. The matrix must outlive the oracle.
class MatrixOracle final : public ComparisonOracle {
 public:
  explicit MatrixOracle(const MatrixTournament& instance, OracleOptions options = {})
      : ComparisonOracle(instance.size(), options), instance_(&instance) {}

 protected:
  [[nodiscard]] bool first_wins(PlayerId u, PlayerId v) const override {
    return instance_->beats(u, v);
  }

 private:
  const MatrixTournament* instance_;
};

/// Oracle backed by an arbitrary judge, e.g. a pairwise model. The judge is
/// queried once per unordered pair resolution with the pair as requested.
class FunctionOracle final : public ComparisonOracle {
 public:
  using Judge = std::function<bool(PlayerId, PlayerId)>;

  FunctionOracle(std::size_t n, Judge judge, OracleOptions options = {})
      : ComparisonOracle(n, options), judge_(std::move(judge)) {}

 protected:
  [[nodiscard]] bool first_wins(PlayerId u, PlayerId v) const override { return judge_(u, v); }

 private:
  Judge judge_;
};

/// Outcome of a probabilistic lookup: (p(u,v), p(v,u)).
struct ProbOutcome {
  double first_wins = 0.0;
  double second_wins = 0.0;
};

/// Counted lookups on a probabilistic instance. Same threading contract as
/// ComparisonOracle.
class ProbabilisticOracle : public LookupCounter {
 public:
  explicit ProbabilisticOracle(const ProbabilisticTournament& instance, OracleOptions options = {});

  ProbabilisticOracle(const ProbabilisticOracle&) = delete;
  ProbabilisticOracle& operator=(const ProbabilisticOracle&) = delete;

  [[nodiscard]] std::size_t size() const noexcept { return instance_->size(); }

  /// Returns (p(u,v), 1 - p(u,v)). Throws Error(invalid_pair) on a bad pair
  /// and Error(malformed_instance) if p(u,v) + p(v,u) is not 1 within 1e-9.
  ProbOutcome prob_probe(PlayerId u, PlayerId v);

  [[nodiscard]] bool memoize() const noexcept { return memoize_; }
  void set_memoize(bool on);

 private:
  const ProbabilisticTournament* instance_;
  bool memoize_;
  mutable std::mutex cache_mutex_;
  // Stores p(lo, hi) for lo < hi.
  BasicMemoCache<double> cache_;
};

}  // namespace tourney
