#include "tourney/probabilistic.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "tourney/alive_set.hpp"
#include "tourney/detail/elimination.hpp"
#include "tourney/error.hpp"

namespace tourney {

ProbRoundResult probabilistic_round(ProbabilisticOracle& oracle, std::uint64_t alpha,
                                    const SearchOptions& options) {
  if (alpha < 1) throw Error(ErrorKind::invalid_spec, "alpha must be at least 1");
  const std::size_t n = oracle.size();
  const auto threshold = static_cast<double>(alpha);

  auto play = [&oracle](PlayerId u, PlayerId v) {
    const ProbOutcome out = oracle.prob_probe(u, v);
    return std::pair<double, double>{out.second_wins, out.first_wins};
  };
  auto on_eliminate = [&](PlayerId u) {
    if (options.on_eliminate) options.on_eliminate(alpha, u);
  };

  detail::EliminationOutcome<double> outcome;
  if (options.schedule == Schedule::array_swap) {
    outcome = detail::run_elimination<SwapAliveSet>(n, threshold, 2 * alpha, play, on_eliminate);
  } else {
    outcome = detail::run_elimination<LinkedAliveSet>(n, threshold, 2 * alpha, play, on_eliminate);
  }
  return {std::move(outcome.alive), std::move(outcome.lost), outcome.exhausted};
}

std::vector<double> expected_losses_over(ProbabilisticOracle& oracle,
                                         std::span<const PlayerId> candidates) {
  const std::size_t n = oracle.size();
  for (const PlayerId u : candidates) {
    if (u.index >= n) {
      throw Error(ErrorKind::invalid_pair, "candidate out of range: " + std::to_string(u.index));
    }
  }
  std::unordered_map<std::uint32_t, std::size_t> slot;
  for (std::size_t i = 0; i < candidates.size(); ++i) slot.emplace(candidates[i].index, i);
  std::vector<double> losses(candidates.size(), 0.0);
  std::unordered_set<std::uint64_t> done;
  for (const PlayerId u : candidates) {
    for (std::size_t w = 0; w < n; ++w) {
      const PlayerId v = player(w);
      if (v == u || !done.insert(pair_key(u, v)).second) continue;
      const ProbOutcome out = oracle.prob_probe(u, v);
      losses[slot.at(u.index)] += out.second_wins;
      if (auto it = slot.find(v.index); it != slot.end()) losses[it->second] += out.first_wins;
    }
  }
  return losses;
}

ExpectedChampionReport find_champions_probabilistic(ProbabilisticOracle& oracle,
                                                    const SearchOptions& options) {
  const std::size_t n = oracle.size();
  if (n == 0) throw Error(ErrorKind::invalid_spec, "tournament has no players");
  oracle.set_memoize(options.memoize);
  const LookupStats start = oracle.stats();

  ExpectedChampionReport report;
  for (std::uint64_t alpha = 1;; alpha *= 2) {
    const std::uint64_t round_start = oracle.stats().comparisons;
    std::vector<PlayerId> candidates;
    if (2 * alpha >= n) {
      for (std::size_t i = 0; i < n; ++i) candidates.push_back(player(i));
    } else {
      candidates = probabilistic_round(oracle, alpha, options).alive;
    }
    const std::vector<double> losses = expected_losses_over(oracle, candidates);
    report.stats.per_alpha.push_back({alpha, oracle.stats().comparisons - round_start});

    const double best = *std::min_element(losses.begin(), losses.end());
    if (best < static_cast<double>(alpha)) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (losses[i] - best <= kExpectedLossTieTolerance) report.champions.push_back(candidates[i]);
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

std::vector<double> expected_losses_brute(const ProbabilisticTournament& instance) {
  const std::size_t n = instance.size();
  std::vector<double> losses(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) losses[u] += instance.prob(v, u);
    }
  }
  return losses;
}

}  // namespace tourney
