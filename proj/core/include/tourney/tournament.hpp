#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tourney {

/// Index of a player in [0, n).
struct PlayerId {
  std::uint32_t index = 0;

  constexpr PlayerId() = default;
  constexpr explicit PlayerId(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

inline constexpr PlayerId player(std::size_t i) {
  return PlayerId(static_cast<std::uint32_t>(i));
}

/// First cell (row, col) that breaks a tournament invariant.
struct Violation {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string reason;
};

/// Dense tournament: wins(u, v) is true iff u beats v.
///
/// The matrix is mutable cell-by-cell so malformed inputs can be represented
/// and reported by validate_matrix; set_winner keeps both cells consistent.
class MatrixTournament {
 public:
  MatrixTournament() = default;
  explicit MatrixTournament(std::size_t n) : n_(n), cells_(n * n, 0) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  [[nodiscard]] bool wins(std::size_t u, std::size_t v) const noexcept {
    return cells_[u * n_ + v] != 0;
  }
  [[nodiscard]] bool beats(PlayerId u, PlayerId v) const noexcept {
    return wins(u.index, v.index);
  }

  void set_cell(std::size_t u, std::size_t v, bool value) noexcept {
    cells_[u * n_ + v] = value ? 1 : 0;
  }
  void set_winner(std::size_t winner, std::size_t loser) noexcept {
    set_cell(winner, loser, true);
    set_cell(loser, winner, false);
  }

  /// Number of players that beat u (column sum, diagonal excluded).
  [[nodiscard]] std::size_t losses_of(std::size_t u) const noexcept;

  friend bool operator==(const MatrixTournament&, const MatrixTournament&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// p(u, v) is the probability that u beats v.
class ProbabilisticTournament {
 public:
  static constexpr double kComplementTolerance = 1e-9;

  ProbabilisticTournament() = default;
  explicit ProbabilisticTournament(std::size_t n) : n_(n), p_(n * n, 0.0) {}

  /// Lifts a binary tournament to the degenerate 0/1-valued case.
  static ProbabilisticTournament from_binary(const MatrixTournament& m);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double prob(std::size_t u, std::size_t v) const noexcept {
    return p_[u * n_ + v];
  }
  void set_prob(std::size_t u, std::size_t v, double p) noexcept { p_[u * n_ + v] = p; }

  friend bool operator==(const ProbabilisticTournament&,
                         const ProbabilisticTournament&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> p_;
};

/// Checks the zero diagonal and antisymmetry; returns the first bad cell in
/// row-major order, or nullopt when the matrix is a tournament.
[[nodiscard]] std::optional<Violation> validate_matrix(const MatrixTournament& m);

/// Checks zero diagonal, range [0, 1] and complementarity within tolerance.
[[nodiscard]] std::optional<Violation> validate_probabilities(
    const ProbabilisticTournament& p,
    double tolerance = ProbabilisticTournament::kComplementTolerance);

}  // namespace tourney
