#include "tourney/algorithms.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "tourney/alive_set.hpp"
#include "tourney/detail/elimination.hpp"
#include "tourney/error.hpp"

namespace tourney {
namespace {

std::vector<PlayerId> all_players(std::size_t n) {
  std::vector<PlayerId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(player(i));
  return out;
}

struct Scored {
  PlayerId who;
  std::int64_t losses;
};

std::vector<Scored> ranked(std::span<const PlayerId> candidates,
                           const std::vector<std::int64_t>& losses) {
  std::vector<Scored> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out.push_back({candidates[i], losses[i]});
  std::sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    return a.losses != b.losses ? a.losses < b.losses : a.who < b.who;
  });
  return out;
}

/// Candidate set for one alpha: the elimination survivors, or everyone when
/// the stop size already covers all players.
std::vector<PlayerId> candidates_for(ComparisonOracle& oracle, std::uint64_t alpha,
                                     const SearchOptions& options, std::size_t keep) {
  const std::size_t n = oracle.size();
  const std::size_t stop = std::max<std::size_t>(2 * alpha, keep);
  if (stop >= n) return all_players(n);
  return exponential_search_round(oracle, alpha, options, keep).alive;
}

}  // namespace

RoundResult exponential_search_round(ComparisonOracle& oracle, std::uint64_t alpha,
                                     const SearchOptions& options, std::size_t keep) {
  if (alpha < 1) throw Error(ErrorKind::invalid_spec, "alpha must be at least 1");
  const std::size_t n = oracle.size();
  const std::size_t stop = std::max<std::size_t>(2 * alpha, keep);
  const auto threshold = static_cast<std::int64_t>(alpha);

  auto play = [&oracle](PlayerId u, PlayerId v) {
    const PlayerId winner = oracle.probe(u, v);
    return winner == u ? std::pair<std::int64_t, std::int64_t>{0, 1}
                       : std::pair<std::int64_t, std::int64_t>{1, 0};
  };
  auto on_eliminate = [&](PlayerId u) {
    if (options.on_eliminate) options.on_eliminate(alpha, u);
  };

  detail::EliminationOutcome<std::int64_t> outcome;
  if (options.schedule == Schedule::array_swap) {
    outcome = detail::run_elimination<SwapAliveSet>(n, threshold, stop, play, on_eliminate);
  } else {
    outcome = detail::run_elimination<LinkedAliveSet>(n, threshold, stop, play, on_eliminate);
  }
  return {std::move(outcome.alive), std::move(outcome.lost), outcome.exhausted};
}

std::vector<std::int64_t> brute_force_over_alive(ComparisonOracle& oracle,
                                                 std::span<const PlayerId> candidates) {
  const std::size_t n = oracle.size();
  std::unordered_map<std::uint32_t, std::size_t> slot;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].index >= n) {
      throw Error(ErrorKind::invalid_pair,
                  "candidate out of range: " + std::to_string(candidates[i].index));
    }
    slot.emplace(candidates[i].index, i);
  }

  std::vector<std::int64_t> losses(candidates.size(), 0);
  std::unordered_set<std::uint64_t> done;
  for (const PlayerId u : candidates) {
    for (std::size_t w = 0; w < n; ++w) {
      const PlayerId v = player(w);
      if (v == u || !done.insert(pair_key(u, v)).second) continue;
      const PlayerId winner = oracle.probe(u, v);
      const PlayerId loser = winner == u ? v : u;
      if (auto it = slot.find(loser.index); it != slot.end()) ++losses[it->second];
    }
  }
  return losses;
}

ChampionReport find_champions(ComparisonOracle& oracle, const SearchOptions& options) {
  const std::size_t n = oracle.size();
  if (n == 0) throw Error(ErrorKind::invalid_spec, "tournament has no players");
  oracle.set_memoize(options.memoize);
  const LookupStats start = oracle.stats();

  ChampionReport report;
  for (std::uint64_t alpha = 1;; alpha *= 2) {
    const std::uint64_t round_start = oracle.stats().comparisons;
    const std::vector<PlayerId> candidates = candidates_for(oracle, alpha, options, 0);
    const std::vector<std::int64_t> losses = brute_force_over_alive(oracle, candidates);
    report.stats.per_alpha.push_back({alpha, oracle.stats().comparisons - round_start});

    const std::int64_t best = *std::min_element(losses.begin(), losses.end());
    if (best < static_cast<std::int64_t>(alpha)) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (losses[i] == best) report.champions.push_back(candidates[i]);
      }
      std::sort(report.champions.begin(), report.champions.end());
      report.losses = best;
      report.final_alpha = alpha;
      break;
    }
  }
  auto per_alpha = std::move(report.stats.per_alpha);
  report.stats = oracle.stats().since(start);
  report.stats.per_alpha = std::move(per_alpha);
  return report;
}

TopKReport top_k_champions(ComparisonOracle& oracle, std::size_t k, const SearchOptions& options) {
  const std::size_t n = oracle.size();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::invalid_k,
                "k must be in [1, " + std::to_string(n) + "], got " + std::to_string(k));
  }
  oracle.set_memoize(options.memoize);
  const LookupStats start = oracle.stats();

  TopKReport report;
  for (std::uint64_t alpha = 1;; alpha *= 2) {
    const std::uint64_t round_start = oracle.stats().comparisons;
    const std::vector<PlayerId> candidates = candidates_for(oracle, alpha, options, k);
    const std::vector<std::int64_t> losses = brute_force_over_alive(oracle, candidates);
    report.stats.per_alpha.push_back({alpha, oracle.stats().comparisons - round_start});

    // Everyone with fewer than alpha losses survives the round, so k such
    // candidates are exactly the global top k.
    const std::vector<Scored> order = ranked(candidates, losses);
    if (order.size() >= k && order[k - 1].losses < static_cast<std::int64_t>(alpha)) {
      for (std::size_t i = 0; i < k; ++i) {
        report.players.push_back(order[i].who);
        report.losses.push_back(order[i].losses);
      }
      report.final_alpha = alpha;
      break;
    }
  }
  auto per_alpha = std::move(report.stats.per_alpha);
  report.stats = oracle.stats().since(start);
  report.stats.per_alpha = std::move(per_alpha);
  return report;
}

}  // namespace tourney
