#include "tourney/oracle.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "tourney/error.hpp"

namespace tourney {
namespace {

void check_pair_bounds(std::size_t n, PlayerId u, PlayerId v) {
  if (u.index >= n || v.index >= n) {
    throw Error(ErrorKind::invalid_pair, "player index out of range: (" + std::to_string(u.index) +
                                             ", " + std::to_string(v.index) + ") with n = " +
                                             std::to_string(n));
  }
  if (u == v) {
    throw Error(ErrorKind::invalid_pair,
                "a player cannot be compared with itself: " + std::to_string(u.index));
  }
}

}  // namespace

LookupStats LookupStats::since(const LookupStats& earlier) const {
  LookupStats d;
  d.comparisons = comparisons - earlier.comparisons;
  d.inferences = inferences - earlier.inferences;
  d.batch_calls = batch_calls - earlier.batch_calls;
  d.cache_hits = cache_hits - earlier.cache_hits;
  return d;
}

LookupStats LookupCounter::stats() const {
  LookupStats s;
  s.comparisons = comparisons_.load(std::memory_order_relaxed);
  s.inferences = s.comparisons * (asymmetric_ ? 2 : 1);
  s.batch_calls = batch_calls_.load(std::memory_order_relaxed);
  s.cache_hits = cache_hits_.load(std::memory_order_relaxed);
  return s;
}

void LookupCounter::reset_stats() noexcept {
  comparisons_ = 0;
  batch_calls_ = 0;
  cache_hits_ = 0;
}

ComparisonOracle::ComparisonOracle(std::size_t n, OracleOptions options)
    : LookupCounter(options.asymmetric), n_(n), memoize_(options.memoize) {}

void ComparisonOracle::check_pair(PlayerId u, PlayerId v) const { check_pair_bounds(n_, u, v); }

PlayerId ComparisonOracle::probe(PlayerId u, PlayerId v) {
  check_pair(u, v);
  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    if (auto hit = cache_.find(u, v)) {
      count_cache_hit();
      return *hit;
    }
  }
  const PlayerId winner = first_wins(u, v) ? u : v;
  count_comparisons(1);
  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    cache_.store(u, v, winner);
  }
  return winner;
}

std::vector<PlayerId> ComparisonOracle::probe_batch(std::span<const PlayerPair> pairs) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    check_pair(u, v);
    if (!seen.insert(pair_key(u, v)).second) {
      throw Error(ErrorKind::duplicate_in_batch, "pair {" + std::to_string(u.index) + ", " +
                                                     std::to_string(v.index) +
                                                     "} appears twice in one batch");
    }
  }
  std::vector<PlayerId> winners(pairs.size());
  if (pairs.empty()) return winners;
  count_batch_call();

  std::vector<std::size_t> fresh_slots;
  std::vector<PlayerPair> fresh;
  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (auto hit = cache_.find(pairs[i].first, pairs[i].second)) {
        winners[i] = *hit;
        count_cache_hit();
      } else {
        fresh_slots.push_back(i);
        fresh.push_back(pairs[i]);
      }
    }
  } else {
    fresh.assign(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) fresh_slots.push_back(i);
  }

  std::vector<PlayerId> resolved(fresh.size());
  resolve_batch(fresh, resolved);
  count_comparisons(fresh.size());

  std::unique_lock<std::mutex> lock(cache_mutex_, std::defer_lock);
  if (memoize_) lock.lock();
  for (std::size_t j = 0; j < fresh.size(); ++j) {
    winners[fresh_slots[j]] = resolved[j];
    if (memoize_) cache_.store(fresh[j].first, fresh[j].second, resolved[j]);
  }
  return winners;
}

void ComparisonOracle::resolve_batch(std::span<const PlayerPair> pairs,
                                     std::span<PlayerId> winners) const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    winners[i] = first_wins(pairs[i].first, pairs[i].second) ? pairs[i].first : pairs[i].second;
  }
}

std::optional<PlayerId> ComparisonOracle::cached_winner(PlayerId u, PlayerId v) const {
  if (!memoize_) return std::nullopt;
  std::lock_guard lock(cache_mutex_);
  return cache_.find(u, v);
}

void ComparisonOracle::set_memoize(bool on) {
  std::lock_guard lock(cache_mutex_);
  memoize_ = on;
  if (!on) cache_.clear();
}

std::size_t ComparisonOracle::cache_size() const {
  std::lock_guard lock(cache_mutex_);
  return cache_.size();
}

ProbabilisticOracle::ProbabilisticOracle(const ProbabilisticTournament& instance,
                                         OracleOptions options)
    : LookupCounter(options.asymmetric), instance_(&instance), memoize_(options.memoize) {}

ProbOutcome ProbabilisticOracle::prob_probe(PlayerId u, PlayerId v) {
  check_pair_bounds(size(), u, v);
  const bool flipped = v.index < u.index;
  const PlayerId lo = flipped ? v : u;
  const PlayerId hi = flipped ? u : v;

  std::optional<double> p_lo;
  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    p_lo = cache_.find(lo, hi);
  }
  if (p_lo) {
    count_cache_hit();
  } else {
    const double forward = instance_->prob(lo.index, hi.index);
    const double backward = instance_->prob(hi.index, lo.index);
    if (std::abs(forward + backward - 1.0) > ProbabilisticTournament::kComplementTolerance) {
      throw Error(ErrorKind::malformed_instance,
                  "complementarity violated at (" + std::to_string(lo.index) + ", " +
                      std::to_string(hi.index) + ")");
    }
    count_comparisons(1);
    p_lo = forward;
    if (memoize_) {
      std::lock_guard lock(cache_mutex_);
      cache_.store(lo, hi, forward);
    }
  }
  const double p_uv = flipped ? 1.0 - *p_lo : *p_lo;
  return {p_uv, 1.0 - p_uv};
}

void ProbabilisticOracle::set_memoize(bool on) {
  std::lock_guard lock(cache_mutex_);
  memoize_ = on;
  if (!on) cache_.clear();
}

}  // namespace tourney
