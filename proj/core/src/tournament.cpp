#include "tourney/tournament.hpp"

#include <cmath>

#include "tourney/error.hpp"

namespace tourney {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::duplicate_in_batch: return "duplicate-in-batch";
    case ErrorKind::invalid_k: return "invalid-k";
    case ErrorKind::invalid_batch_size: return "invalid-batch-size";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::malformed_instance: return "malformed-instance";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

std::size_t MatrixTournament::losses_of(std::size_t u) const noexcept {
  std::size_t count = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != u && wins(v, u)) ++count;
  }
  return count;
}

ProbabilisticTournament ProbabilisticTournament::from_binary(const MatrixTournament& m) {
  ProbabilisticTournament p(m.size());
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (u != v) p.set_prob(u, v, m.wins(u, v) ? 1.0 : 0.0);
    }
  }
  return p;
}

std::optional<Violation> validate_matrix(const MatrixTournament& m) {
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) {
        if (m.wins(u, u)) return Violation{u, u, "diagonal cell must be 0"};
        continue;
      }
      if (m.wins(u, v) == m.wins(v, u)) {
        const std::size_t r = u < v ? u : v;
        const std::size_t c = u < v ? v : u;
        return Violation{r, c,
                         m.wins(u, v) ? "both players marked as winner"
                                      : "neither player marked as winner"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate_probabilities(const ProbabilisticTournament& p,
                                                double tolerance) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const double x = p.prob(u, v);
      if (u == v) {
        if (x != 0.0) return Violation{u, u, "diagonal cell must be 0.0"};
        continue;
      }
      if (!(x >= 0.0 && x <= 1.0)) return Violation{u, v, "probability outside [0, 1]"};
      if (std::abs(x + p.prob(v, u) - 1.0) > tolerance) {
        const std::size_t r = u < v ? u : v;
        const std::size_t c = u < v ? v : u;
        return Violation{r, c, "p(u,v) + p(v,u) differs from 1"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace tourney
