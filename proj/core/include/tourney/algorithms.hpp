#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tourney/oracle.hpp"

namespace tourney {

/// Order in which the elimination tournament picks its matches.
enum class Schedule {
  /// Alive players in an array prefix; the loser is swapped out.
  array_swap,
  /// Alive players in a linked list; input order is kept, so players placed
  /// first (e.g. by a cheaper pre-ranker) meet first.
  order_preserving,
};

struct SearchOptions {
  Schedule schedule = Schedule::array_swap;
  /// Keep every lookup across rounds of the exponential search.
  bool memoize = true;
  /// Observer for each elimination, called with (alpha, player).
  std::function<void(std::uint64_t, PlayerId)> on_eliminate;
};

/// Outcome of a champion search. `losses` is the loss count of every
/// champion, `final_alpha` the threshold of the round that succeeded, so
/// losses < final_alpha always holds.
template <typename Loss>
struct BasicChampionReport {
  std::vector<PlayerId> champions;
  Loss losses{};
  std::uint64_t final_alpha = 0;
  LookupStats stats;
};

using ChampionReport = BasicChampionReport<std::int64_t>;

struct TopKReport {
  std::vector<PlayerId> players;
  std::vector<std::int64_t> losses;
  std::uint64_t final_alpha = 0;
  LookupStats stats;
};

struct RoundResult {
  std::vector<PlayerId> alive;
  /// Per-player losses within this round, indexed by player.
  std::vector<std::int64_t> lost;
  bool exhausted = false;
};

/// Runs the elimination tournament for one alpha: matches between alive
/// players are played once each until at most max(2 * alpha, keep) players
/// remain, and a player is dropped when it reaches alpha losses. Nobody whose
/// true loss count is below alpha is ever dropped.
///
/// Uses the oracle as configured; call sites choose memoization.
RoundResult exponential_search_round(ComparisonOracle& oracle, std::uint64_t alpha,
                                     const SearchOptions& options = {}, std::size_t keep = 0);

/// Exact loss counts (against the whole tournament) of `candidates`, aligned
/// with the input. Each unordered pair is probed at most once.
std::vector<std::int64_t> brute_force_over_alive(ComparisonOracle& oracle,
                                                 std::span<const PlayerId> candidates);

/// Every player with the minimum number of losses, using O(l * n) lookups
/// where l is that minimum.
///
/// Alpha runs over 1, 2, 4, ...; a round whose stop size already covers all
/// players is skipped and brute force over everyone decides, so the search
/// terminates for any oracle.
ChampionReport find_champions(ComparisonOracle& oracle, const SearchOptions& options = {});

/// The k players with fewest losses, ordered by (losses, index). Throws
/// Error(invalid_k) unless 1 <= k <= n.
TopKReport top_k_champions(ComparisonOracle& oracle, std::size_t k,
                           const SearchOptions& options = {});

}  // namespace tourney
