#include "tourney/baseline.hpp"

#include <algorithm>

namespace tourney {

FullSolution brute_force_champions(const MatrixTournament& instance) {
  const std::size_t n = instance.size();
  FullSolution out;
  out.losses.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && instance.wins(u, v)) ++out.losses[v];
    }
  }
  out.ranking.reserve(n);
  for (std::size_t u = 0; u < n; ++u) out.ranking.push_back(player(u));
  std::stable_sort(out.ranking.begin(), out.ranking.end(), [&](PlayerId a, PlayerId b) {
    return out.losses[a.index] < out.losses[b.index];
  });
  if (n > 0) {
    const std::int64_t best = out.losses[out.ranking.front().index];
    for (const PlayerId u : out.ranking) {
      if (out.losses[u.index] != best) break;
      out.champions.push_back(u);
    }
  }
  out.comparisons = full_tournament_cost(n, false).comparisons;
  return out;
}

FullTournamentCost full_tournament_cost(std::size_t n, bool asymmetric) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  return {pairs, asymmetric ? 2 * pairs : pairs};
}

}  // namespace tourney
