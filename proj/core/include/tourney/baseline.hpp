#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Full Copeland solution of a binary instance.
struct FullSolution {
  std::vector<std::int64_t> losses;
  /// All players by ascending losses, ties by index.
  std::vector<PlayerId> ranking;
  std::vector<PlayerId> champions;
  /// n(n-1)/2: every unordered pair is looked at once.
  std::uint64_t comparisons = 0;
};

struct FullTournamentCost {
  std::uint64_t comparisons = 0;
  std::uint64_t inferences = 0;
};

/// Reads the matrix directly; O(n^2).
FullSolution brute_force_champions(const MatrixTournament& instance);

/// Cost of playing every match: n(n-1)/2 comparisons, doubled in inferences
/// when the pairwise model is asymmetric.
FullTournamentCost full_tournament_cost(std::size_t n, bool asymmetric);

}  // namespace tourney
