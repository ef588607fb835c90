#pragma once

// Small instances and reference answers computed straight from the matrix,
// independent of the library's own baseline.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tourney/tournament.hpp"

namespace testing {

inline tourney::MatrixTournament three_cycle() {
  tourney::MatrixTournament m(3);
  m.set_winner(0, 1);
  m.set_winner(1, 2);
  m.set_winner(2, 0);
  return m;
}

inline tourney::MatrixTournament transitive(std::size_t n) {
  tourney::MatrixTournament m(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) m.set_winner(u, v);
  }
  return m;
}

/// Instance number `code` of the 2^(n(n-1)/2) tournaments on n players: bit
/// i of code orients the i-th pair u < v in row-major order.
inline tourney::MatrixTournament enumerate(std::size_t n, std::uint64_t code) {
  tourney::MatrixTournament m(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) {
        m.set_winner(u, v);
      } else {
        m.set_winner(v, u);
      }
    }
  }
  return m;
}

/// In-degree of each player, i.e. matches lost.
inline std::vector<std::int64_t> column_sums(const tourney::MatrixTournament& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) out[v] += m.wins(u, v) ? 1 : 0;
  }
  return out;
}

/// Losses recounted from out-degrees: n - 1 - wins.
inline std::vector<std::int64_t> losses_from_wins(const tourney::MatrixTournament& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> out(n, static_cast<std::int64_t>(n) - 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) out[u] -= m.wins(u, v) ? 1 : 0;
  }
  return out;
}

template <typename T>
std::vector<std::uint32_t> argmin(const std::vector<T>& xs, T tol = T{}) {
  std::vector<std::uint32_t> out;
  if (xs.empty()) return out;
  const T best = *std::min_element(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] - best <= tol) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

inline std::vector<double> prob_column_sums(const tourney::ProbabilisticTournament& p) {
  const std::size_t n = p.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) out[v] += p.prob(u, v);
    }
  }
  return out;
}

template <typename Players>
std::vector<std::uint32_t> indices(const Players& players) {
  std::vector<std::uint32_t> out;
  for (const auto& p : players) out.push_back(p.index);
  return out;
}

}  // namespace testing
