#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tourney/algorithms.hpp"
#include "tourney/batched.hpp"
#include "tourney/error.hpp"
#include "tourney/generators.hpp"

using namespace tourney;
using testing::indices;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::vector<Pair> plain(const std::vector<PlayerPair>& pairs) {
  std::vector<Pair> out;
  for (const auto& [u, v] : pairs) out.emplace_back(u.index, v.index);
  return out;
}

std::set<std::uint64_t> keys(const BatchPlan& plan) {
  std::set<std::uint64_t> out;
  for (const auto& [u, v] : plan.pairs) out.insert(pair_key(u, v));
  return out;
}

}  // namespace

TEST_CASE("increase_loss") {
  BatchState s(4, 2, 1);
  s.increase_loss(player(1));
  CHECK(s.lost(player(1)) == 1);
  CHECK(s.alive(player(1)));
  s.increase_loss(player(1));
  CHECK(s.lost(player(1)) == 2);
  CHECK_FALSE(s.alive(player(1)));
  CHECK(s.num_alive() == 3);
  CHECK(indices(s.alive_players()) == std::vector<std::uint32_t>{0, 2, 3});

  BatchState one(3, 1, 1);
  one.increase_loss(player(0));
  CHECK_FALSE(one.alive(player(0)));
  try {
    one.increase_loss(player(0));
    FAIL("expected internal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::internal);
  }
}

TEST_CASE("halving the effective batch size") {
  BatchState s(40, 2, 16);
  // 40 >= 2 * 16 + 4
  CHECK_FALSE(s.halve_while_needed());
  CHECK(s.effective_batch_size() == 16);
  for (std::uint32_t u = 0; u < 10; ++u) {
    s.increase_loss(player(u));
    s.increase_loss(player(u));
  }
  // 30 < 36 -> 8
  CHECK(s.halve_while_needed());
  CHECK(s.effective_batch_size() == 8);

  BatchState tiny(3, 4, 8);
  tiny.halve_while_needed();
  CHECK(tiny.effective_batch_size() == 1);
}

TEST_CASE("bad batch state arguments") {
  try {
    BatchState s(4, 1, 0);
    FAIL("expected invalid_batch_size");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_batch_size);
  }
}

TEST_CASE("build_batch with fresh state") {
  BatchState s(20, 1, 4);
  const BatchPlan plan = build_batch(s);
  REQUIRE(plan.pairs.size() == 4);
  CHECK(plan.scheduled == 4);
  std::set<std::uint32_t> players;
  for (const auto& [u, v] : plan.pairs) {
    CHECK(u != v);
    players.insert(u.index);
    players.insert(v.index);
    CHECK(s.played(u, v));
  }
  // at alpha = 1 each match speculatively knocks out both players
  CHECK(players.size() == 8);
  CHECK(s.num_alive() == 20);
  for (std::uint32_t u = 0; u < 20; ++u) CHECK(s.lost(player(u)) == 0);
}

TEST_CASE("a player one loss from elimination gets at most one more match") {
  BatchState s(20, 2, 8);
  s.increase_loss(player(0));
  const BatchPlan plan = build_batch(s);
  CHECK(plan.pairs.size() == 8);
  int appearances = 0;
  for (const auto& [u, v] : plan.pairs) appearances += (u == player(0)) + (v == player(0));
  CHECK(appearances <= 1);
  CHECK(s.lost(player(0)) == 1);
}

TEST_CASE("consecutive plans never repeat a pair") {
  BatchState s(16, 3, 8);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 4; ++i) {
    const BatchPlan plan = build_batch(s);
    for (const auto k : keys(plan)) CHECK(seen.insert(k).second);
  }
}

TEST_CASE("cached pairs go to known without taking a slot") {
  const auto t = testing::transitive(10);
  MatrixOracle oracle(t, {.memoize = true});
  oracle.probe(player(0), player(1));
  BatchState s(10, 2, 3);
  const BatchPlan plan = build_batch(s, &oracle);
  CHECK(plan.pairs.size() == 3);
  REQUIRE(plan.known.size() == 1);
  CHECK(plan.known.front().winner == player(0));
  for (const auto& [u, v] : plan.pairs) CHECK_FALSE(oracle.cached_winner(u, v).has_value());
}

TEST_CASE("fill heuristic pads with the lowest-loss player's arcs") {
  BatchState s(5, 2, 4);
  for (std::uint32_t u = 1; u <= 4; ++u) s.increase_loss(player(u));
  BatchPlan plan;
  plan.pairs = {{player(1), player(2)}, {player(3), player(4)}};
  plan.scheduled = 2;
  ArcLedger ledger(5);
  const BatchPlan out = fill_batch_heuristic(s, plan, 4, ledger);
  CHECK(plain(out.pairs) == std::vector<Pair>{{1, 2}, {3, 4}, {0, 1}, {0, 2}});
  CHECK(out.scheduled == 2);
}

TEST_CASE("fill heuristic leaves full or exhausted plans alone") {
  BatchState s(3, 2, 2);
  BatchPlan full;
  full.pairs = {{player(0), player(1)}, {player(1), player(2)}};
  full.scheduled = 2;
  ArcLedger ledger(3);
  CHECK(plain(fill_batch_heuristic(s, full, 2, ledger).pairs) == plain(full.pairs));

  ledger.record(player(0), player(1));
  ledger.record(player(0), player(2));
  ledger.record(player(1), player(2));
  BatchPlan partial;
  partial.pairs = {};
  CHECK(fill_batch_heuristic(s, partial, 3, ledger).pairs.empty());
}

TEST_CASE("ledger cursor") {
  ArcLedger ledger(5);
  ledger.record(player(2), player(0));
  std::unordered_set<std::uint64_t> reserved{pair_key(player(2), player(1))};
  CHECK(ledger.next_unprobed(player(2), reserved) == player(3));
  CHECK(ledger.next_unprobed(player(0), {}) == player(1));
  CHECK(ledger.unfolded(player(0), player(2)));
}

TEST_CASE("B = 1 agrees with the sequential search") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto m = gen_random(20 + seed, seed);
    MatrixOracle a(m);
    MatrixOracle b(m);
    const auto seq = find_champions(a);
    const auto bat = find_champions_batched(b, {.batch_size = 1});
    CHECK(indices(bat.champions) == indices(seq.champions));
    CHECK(bat.losses == seq.losses);
  }
}

TEST_CASE("transitive n = 30: larger batches need fewer calls") {
  const auto t = testing::transitive(30);
  MatrixOracle o4(t);
  MatrixOracle o8(t);
  const auto r4 = find_champions_batched(o4, {.batch_size = 4});
  const auto r8 = find_champions_batched(o8, {.batch_size = 8});
  CHECK(indices(r8.champions) == std::vector<std::uint32_t>{0});
  CHECK(r8.losses == 0);
  CHECK(r8.stats.batch_calls > 0);
  CHECK(r8.stats.batch_calls <= r4.stats.batch_calls);
}

TEST_CASE("planted n = 200, ell = 4, B = 32") {
  const auto inst = gen_planted(200, 4, 1);
  const auto sums = testing::column_sums(inst.matrix);
  for (BruteForceMode mode : {BruteForceMode::capped, BruteForceMode::exhaustive}) {
    for (bool fill : {true, false}) {
      MatrixOracle oracle(inst.matrix);
      const auto r = find_champions_batched(
          oracle, {.batch_size = 32, .memoize = true, .batch_fill = fill, .brute_force = mode});
      CHECK(indices(r.champions) == testing::argmin(sums));
      CHECK(r.losses == 4);
      CHECK(r.diagnostics.halving_window_violations == 0);
      CHECK(r.diagnostics.loss_cap_violations == 0);
      CHECK(r.diagnostics.elimination_calls + r.diagnostics.brute_force_calls == r.stats.batch_calls);
    }
  }
}

TEST_CASE("batched search matches brute force on random instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 5 + seed * 3;
    const auto m = gen_random(n, seed);
    const auto expected = testing::argmin(testing::column_sums(m));
    for (std::size_t b : {2, 3, 8, 64}) {
      for (bool memo : {true, false}) {
        MatrixOracle oracle(m);
        const auto r = find_champions_batched(oracle, {.batch_size = b, .memoize = memo});
        CHECK(indices(r.champions) == expected);
        CHECK(r.diagnostics.discarded_results == 0);
      }
    }
  }
}

TEST_CASE("batch size 0 is rejected") {
  const auto t = testing::transitive(4);
  MatrixOracle oracle(t);
  try {
    find_champions_batched(oracle, {.batch_size = 0});
    FAIL("expected invalid_batch_size");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_batch_size);
  }
}

TEST_CASE("every batch respects the size limit") {
  const auto inst = gen_planted(120, 3, 9);
  struct Sizes final : ComparisonOracle {
    explicit Sizes(const MatrixTournament& m) : ComparisonOracle(m.size(), {}), m_(&m) {}
    mutable std::size_t largest = 0;
    bool first_wins(PlayerId u, PlayerId v) const override { return m_->beats(u, v); }
    void resolve_batch(std::span<const PlayerPair> pairs, std::span<PlayerId> winners) const override {
      largest = std::max(largest, pairs.size());
      ComparisonOracle::resolve_batch(pairs, winners);
    }
    const MatrixTournament* m_;
  } oracle(inst.matrix);
  const auto r = find_champions_batched(oracle, {.batch_size = 16});
  CHECK(oracle.largest <= 16);
  CHECK(indices(r.champions) == std::vector<std::uint32_t>{0});
}
