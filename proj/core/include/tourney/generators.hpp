#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tourney/tournament.hpp"

namespace tourney {

enum class GenKind { transitive, regular, random, planted, anomalous, random_prob };

std::string_view to_string(GenKind kind) noexcept;

/// Parameters of a generated instance. `n` is ignored for anomalous (which
/// uses k + m players); `ell` only matters for planted.
struct GenSpec {
  GenKind kind = GenKind::random;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

/// Player u beats v iff u < v; player 0 is the Condorcet winner.
MatrixTournament gen_transitive(std::size_t n);

/// Player i beats the (n - 1) / 2 players that follow it cyclically, so every
/// player has (n - 1) / 2 losses. Requires odd n.
MatrixTournament gen_regular_rotational(std::size_t n);

/// Each pair u < v (row-major order) is oriented by the top bit of one draw.
MatrixTournament gen_random(std::size_t n, std::uint64_t seed);

struct PlantedInstance {
  MatrixTournament matrix;
  PlayerId champion;
  std::size_t ell = 0;
};

/// Regular tournament on players 1..n-1, plus player 0 beating everyone except
/// `ell` players drawn without replacement. Player 0 is the unique champion
/// with exactly `ell` losses. Requires even n and 2 * ell < n - 2.
PlantedInstance gen_planted(std::size_t n, std::size_t ell, std::uint64_t seed);

struct AnomalousInstance {
  MatrixTournament matrix;
  std::size_t k = 0;
  std::size_t m = 0;
  /// Row of the k x m block with k zeroes; that player is the champion.
  std::size_t anomalous_row = 0;
  /// (3k - 1) / 2
  std::size_t ell = 0;
};

/// Block tournament [[B, M], [~M^T, C]] with B, C regular on k and m players
/// and M a k x m 0/1 block whose rows have k + 1 zeroes except one row with k.
/// The champion sits in the first k players and loses (3k - 1) / 2 matches.
/// Requires odd k, odd m and m > 3k.
AnomalousInstance gen_anomalous(std::size_t k, std::size_t m, std::uint64_t seed);

/// p(u, v) uniform in [0, 1) for u < v and p(v, u) = 1 - p(u, v).
ProbabilisticTournament gen_random_probabilistic(std::size_t n, std::uint64_t seed);

/// Binary instance for any kind but random_prob.
MatrixTournament generate_matrix(const GenSpec& spec);

}  // namespace tourney
