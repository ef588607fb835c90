#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tourney/algorithms.hpp"
#include "tourney/oracle.hpp"

namespace tourney {

/// Champion search where a lookup returns complementary win probabilities and
/// champions minimize the expected number of losses.
using ExpectedChampionReport = BasicChampionReport<double>;

/// Players whose expected losses are within this of the minimum are reported
/// as tied champions.
inline constexpr double kExpectedLossTieTolerance = 1e-9;

struct ProbRoundResult {
  std::vector<PlayerId> alive;
  /// Accumulated expected losses within the round, indexed by player.
  std::vector<double> lost;
  bool exhausted = false;
};

/// Elimination tournament for one alpha. Each lookup of {u, v} adds p(v,u) to
/// u and p(u,v) to v; a player is dropped once its total reaches alpha.
ProbRoundResult probabilistic_round(ProbabilisticOracle& oracle, std::uint64_t alpha,
                                    const SearchOptions& options = {});

/// Expected losses of `candidates` against the whole tournament. Each
/// unordered pair is probed at most once.
std::vector<double> expected_losses_over(ProbabilisticOracle& oracle,
                                         std::span<const PlayerId> candidates);

/// Exit test of a round is strict (minimum < alpha); tie reporting uses
/// kExpectedLossTieTolerance. Throws Error(malformed_instance) when a probe
/// exposes a complementarity violation.
ExpectedChampionReport find_champions_probabilistic(ProbabilisticOracle& oracle,
                                                    const SearchOptions& options = {});

/// Column sums sum_v p(v, u) read directly from the matrix, ascending v.
std::vector<double> expected_losses_brute(const ProbabilisticTournament& instance);

}  // namespace tourney
