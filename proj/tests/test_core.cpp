#include <doctest.h>

#include <set>
#include <thread>

#include "support.hpp"
#include "tourney/error.hpp"
#include "tourney/oracle.hpp"

using namespace tourney;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("probe returns the winner") {
  const auto t = testing::transitive(3);
  MatrixOracle oracle(t);
  CHECK(oracle.probe(player(0), player(1)) == player(0));
  CHECK(oracle.probe(player(2), player(1)) == player(1));

  const auto c = testing::three_cycle();
  MatrixOracle cycle(c);
  CHECK(cycle.probe(player(2), player(0)) == player(2));
  CHECK(cycle.stats().comparisons == 1);
  CHECK(cycle.stats().inferences == 2);
}

TEST_CASE("probe rejects bad pairs") {
  const auto t = testing::transitive(3);
  MatrixOracle oracle(t);
  CHECK(kind_of([&] { oracle.probe(player(1), player(1)); }) == ErrorKind::invalid_pair);
  CHECK(kind_of([&] { oracle.probe(player(0), player(3)); }) == ErrorKind::invalid_pair);
  CHECK(oracle.stats().comparisons == 0);
}

TEST_CASE("symmetric accounting counts one inference per comparison") {
  const auto t = testing::transitive(4);
  MatrixOracle oracle(t, {.asymmetric = false});
  oracle.probe(player(0), player(1));
  oracle.probe(player(2), player(3));
  CHECK(oracle.stats().comparisons == 2);
  CHECK(oracle.stats().inferences == 2);
}

TEST_CASE("memoized probes are free the second time") {
  const auto t = testing::transitive(4);
  MatrixOracle oracle(t, {.memoize = true});
  CHECK(oracle.probe(player(3), player(1)) == player(1));
  CHECK(oracle.probe(player(1), player(3)) == player(1));
  CHECK(oracle.stats().comparisons == 1);
  CHECK(oracle.stats().cache_hits == 1);
  CHECK(oracle.cached_winner(player(3), player(1)) == player(1));
  CHECK_FALSE(oracle.cached_winner(player(0), player(1)).has_value());

  oracle.set_memoize(false);
  CHECK(oracle.cache_size() == 0);
  oracle.probe(player(1), player(3));
  CHECK(oracle.stats().comparisons == 2);

  oracle.reset_stats();
  CHECK(oracle.stats().comparisons == 0);
  CHECK(oracle.stats().cache_hits == 0);
}

TEST_CASE("probe_batch matches sequential probes") {
  const auto t = testing::transitive(5);
  MatrixOracle seq(t);
  MatrixOracle batch(t);
  const std::vector<PlayerPair> pairs{{player(3), player(1)}, {player(0), player(4)}, {player(2), player(4)}};
  const auto winners = batch.probe_batch(pairs);
  REQUIRE(winners.size() == 3);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(winners[i] == seq.probe(pairs[i].first, pairs[i].second));
  }
  CHECK(batch.stats().batch_calls == 1);
  CHECK(batch.stats().comparisons == 3);
}

TEST_CASE("empty batch costs nothing") {
  const auto t = testing::transitive(3);
  MatrixOracle oracle(t);
  CHECK(oracle.probe_batch({}).empty());
  CHECK(oracle.stats().batch_calls == 0);
}

TEST_CASE("batch with a repeated unordered pair is rejected") {
  const auto t = testing::transitive(3);
  MatrixOracle oracle(t);
  const std::vector<PlayerPair> pairs{{player(1), player(2)}, {player(2), player(1)}};
  CHECK(kind_of([&] { oracle.probe_batch(pairs); }) == ErrorKind::duplicate_in_batch);
  CHECK(oracle.stats().batch_calls == 0);
  CHECK(oracle.stats().comparisons == 0);
}

TEST_CASE("memoized batch only pays for fresh pairs") {
  const auto t = testing::transitive(4);
  MatrixOracle oracle(t, {.memoize = true});
  oracle.probe(player(0), player(1));
  const std::vector<PlayerPair> pairs{{player(1), player(0)}, {player(2), player(3)}};
  const auto winners = oracle.probe_batch(pairs);
  CHECK(winners == std::vector<PlayerId>{player(0), player(2)});
  CHECK(oracle.stats().comparisons == 2);
  CHECK(oracle.stats().cache_hits == 1);
  CHECK(oracle.stats().batch_calls == 1);
}

TEST_CASE("cached answers agree with the instance") {
  // soundness: whatever the cache returns is what the matrix says
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto m = testing::enumerate(4, code);
    MatrixOracle oracle(m, {.memoize = true});
    for (int rep = 0; rep < 2; ++rep) {
      for (std::uint32_t u = 0; u < 4; ++u) {
        for (std::uint32_t v = 0; v < 4; ++v) {
          if (u == v) continue;
          const PlayerId w = oracle.probe(player(u), player(v));
          CHECK(w == (m.wins(u, v) ? player(u) : player(v)));
        }
      }
    }
    CHECK(oracle.stats().comparisons == 6);
  }
}

TEST_CASE("function oracle") {
  FunctionOracle oracle(4, [](PlayerId u, PlayerId v) { return u.index > v.index; });
  CHECK(oracle.probe(player(0), player(3)) == player(3));
  CHECK(oracle.size() == 4);
}

TEST_CASE("concurrent probes are counted exactly") {
  const std::size_t n = 64;
  const auto t = testing::transitive(n);
  MatrixOracle oracle(t, {.memoize = true});
  const unsigned threads = 4;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      // thread w owns the rows u with u % threads == w
      for (std::uint32_t u = w; u < n; u += threads) {
        for (std::uint32_t v = u + 1; v < n; ++v) oracle.probe(player(u), player(v));
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(oracle.stats().comparisons == n * (n - 1) / 2);
  CHECK(oracle.cache_size() == n * (n - 1) / 2);

  // everyone repeats everything: only cache hits
  pool.clear();
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) CHECK(oracle.probe(player(v), player(u)) == player(u));
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(oracle.stats().comparisons == n * (n - 1) / 2);
  CHECK(oracle.stats().cache_hits == threads * n * (n - 1) / 2);
}

TEST_CASE("validate_matrix") {
  CHECK_FALSE(validate_matrix(testing::three_cycle()).has_value());

  MatrixTournament both(3);
  both.set_winner(1, 2);
  both.set_winner(2, 0);
  both.set_cell(0, 1, true);
  both.set_cell(1, 0, true);
  auto v = validate_matrix(both);
  REQUIRE(v.has_value());
  CHECK(v->row == 0);
  CHECK(v->col == 1);

  MatrixTournament diag = testing::three_cycle();
  diag.set_cell(2, 2, true);
  v = validate_matrix(diag);
  REQUIRE(v.has_value());
  CHECK(v->row == 2);
  CHECK(v->col == 2);

  MatrixTournament neither(2);
  v = validate_matrix(neither);
  REQUIRE(v.has_value());
  CHECK(v->row == 0);
  CHECK(v->col == 1);
}

TEST_CASE("losses_of is the column sum") {
  const auto t = testing::transitive(5);
  for (std::size_t u = 0; u < 5; ++u) CHECK(t.losses_of(u) == u);
}

TEST_CASE("pair_key ignores orientation") {
  CHECK(pair_key(player(3), player(9)) == pair_key(player(9), player(3)));
  CHECK(pair_key(player(0), player(1)) != pair_key(player(0), player(2)));
}

TEST_CASE("error kinds have names") {
  std::set<std::string_view> names;
  for (ErrorKind k : {ErrorKind::invalid_pair, ErrorKind::duplicate_in_batch, ErrorKind::invalid_k,
                      ErrorKind::invalid_batch_size, ErrorKind::invalid_spec,
                      ErrorKind::malformed_instance, ErrorKind::parse_error, ErrorKind::internal}) {
    names.insert(to_string(k));
  }
  CHECK(names.size() == 8);
}
