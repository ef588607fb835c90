#include "tourney/generators.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tourney/error.hpp"
#include "tourney/random.hpp"

namespace tourney {
namespace {

[[noreturn]] void bad_spec(const std::string& message) {
  throw Error(ErrorKind::invalid_spec, message);
}

/// `count` distinct values of [0, size), by a partial Fisher-Yates shuffle.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t size, std::size_t count) {
  std::vector<std::size_t> pool(size);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(size - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

/// Regular rotational tournament on players offset..offset+size-1.
void embed_regular(MatrixTournament& m, std::size_t offset, std::size_t size) {
  const std::size_t half = (size - 1) / 2;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t d = 1; d <= half; ++d) m.set_winner(offset + i, offset + (i + d) % size);
  }
}

}  // namespace

std::string_view to_string(GenKind kind) noexcept {
  switch (kind) {
    case GenKind::transitive: return "transitive";
    case GenKind::regular: return "regular";
    case GenKind::random: return "random";
    case GenKind::planted: return "planted";
    case GenKind::anomalous: return "anomalous";
    case GenKind::random_prob: return "random-prob";
  }
  return "unknown";
}

MatrixTournament gen_transitive(std::size_t n) {
  if (n < 1) bad_spec("transitive: n must be at least 1");
  MatrixTournament m(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) m.set_winner(u, v);
  }
  return m;
}

MatrixTournament gen_regular_rotational(std::size_t n) {
  if (n < 1 || n % 2 == 0) bad_spec("regular: n must be odd, got " + std::to_string(n));
  MatrixTournament m(n);
  embed_regular(m, 0, n);
  return m;
}

MatrixTournament gen_random(std::size_t n, std::uint64_t seed) {
  if (n < 1) bad_spec("random: n must be at least 1");
  Rng rng(seed);
  MatrixTournament m(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.coin()) {
        m.set_winner(u, v);
      } else {
        m.set_winner(v, u);
      }
    }
  }
  return m;
}

PlantedInstance gen_planted(std::size_t n, std::size_t ell, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) bad_spec("planted: n - 1 must be odd, got n = " + std::to_string(n));
  if (2 * ell >= n - 2) {
    bad_spec("planted: ell must be below (n - 2) / 2, got ell = " + std::to_string(ell) +
             " for n = " + std::to_string(n));
  }
  Rng rng(seed);
  PlantedInstance out{MatrixTournament(n), PlayerId(0), ell};
  embed_regular(out.matrix, 1, n - 1);
  for (std::size_t v = 1; v < n; ++v) out.matrix.set_winner(0, v);
  for (const std::size_t i : sample_without_replacement(rng, n - 1, ell)) {
    out.matrix.set_winner(i + 1, 0);
  }
  return out;
}

AnomalousInstance gen_anomalous(std::size_t k, std::size_t m, std::uint64_t seed) {
  if (k % 2 == 0 || m % 2 == 0) {
    bad_spec("anomalous: k and m must be odd, got k = " + std::to_string(k) +
             ", m = " + std::to_string(m));
  }
  if (m <= 3 * k) bad_spec("anomalous: m must exceed 3k");
  Rng rng(seed);
  AnomalousInstance out{MatrixTournament(k + m), k, m, 0, (3 * k - 1) / 2};
  embed_regular(out.matrix, 0, k);
  embed_regular(out.matrix, k, m);

  out.anomalous_row = static_cast<std::size_t>(rng.below(k));
  for (std::size_t i = 0; i < k; ++i) {
    // Row i of M: first-block player i beats last-block player j iff M[i][j] = 1.
    for (std::size_t j = 0; j < m; ++j) out.matrix.set_winner(i, k + j);
    const std::size_t zeroes = i == out.anomalous_row ? k : k + 1;
    for (const std::size_t j : sample_without_replacement(rng, m, zeroes)) {
      out.matrix.set_winner(k + j, i);
    }
  }
  return out;
}

ProbabilisticTournament gen_random_probabilistic(std::size_t n, std::uint64_t seed) {
  if (n < 1) bad_spec("random-prob: n must be at least 1");
  Rng rng(seed);
  ProbabilisticTournament p(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = rng.unit();
      p.set_prob(u, v, x);
      p.set_prob(v, u, 1.0 - x);
    }
  }
  return p;
}

MatrixTournament generate_matrix(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::transitive: return gen_transitive(spec.n);
    case GenKind::regular: return gen_regular_rotational(spec.n);
    case GenKind::random: return gen_random(spec.n, spec.seed);
    case GenKind::planted: return gen_planted(spec.n, spec.ell, spec.seed).matrix;
    case GenKind::anomalous: return gen_anomalous(spec.k, spec.m, spec.seed).matrix;
    case GenKind::random_prob: break;
  }
  bad_spec("random-prob instances are probabilistic; use gen_random_probabilistic");
}

}  // namespace tourney
