#include "tourney/batched.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>

#include "tourney/error.hpp"

namespace tourney {

void ArcLedger::record(PlayerId u, PlayerId v) {
  unfolded_[u.index].insert(v.index);
  unfolded_[v.index].insert(u.index);
}

std::optional<PlayerId> ArcLedger::next_unprobed(PlayerId u,
                                                 const std::unordered_set<std::uint64_t>& reserved) {
  const auto n = static_cast<std::uint32_t>(unfolded_.size());
  auto& c = cursor_[u.index];
  while (c < n && (c == u.index || unfolded_[u.index].contains(c))) ++c;
  for (std::uint32_t w = c; w < n; ++w) {
    if (w == u.index || unfolded_[u.index].contains(w)) continue;
    if (reserved.contains(pair_key(u, PlayerId(w)))) continue;
    return PlayerId(w);
  }
  return std::nullopt;
}

BatchState::BatchState(std::size_t n, std::uint64_t alpha, std::size_t batch_size)
    : alpha_(alpha),
      batch_size_(batch_size),
      effective_(batch_size),
      num_alive_(n),
      lost_(n, 0),
      alive_(n, 1),
      next_(n),
      prev_(n),
      head_(0),
      overlay_(n, 0) {
  if (batch_size < 1) throw Error(ErrorKind::invalid_batch_size, "batch size must be at least 1");
  if (alpha < 1) throw Error(ErrorKind::invalid_spec, "alpha must be at least 1");
  const auto sentinel = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    next_[i] = i + 1;
    prev_[i] = i == 0 ? sentinel : i - 1;
  }
  if (n == 0) head_ = sentinel;
  cursor_first_ = head_;
  cursor_second_ = head_ == sentinel ? sentinel : next_alive(head_);
}

std::vector<PlayerId> BatchState::alive_players() const {
  std::vector<PlayerId> out;
  out.reserve(num_alive_);
  for (std::uint32_t u = head_; u != end(); u = next_[u]) out.emplace_back(u);
  return out;
}

std::uint32_t BatchState::next_alive(std::uint32_t node) const noexcept {
  std::uint32_t x = next_[node];
  while (x != end() && alive_[x] == 0) x = next_[x];
  return x;
}

std::uint32_t BatchState::first_alive() const noexcept { return head_; }

bool BatchState::locally_alive(std::uint32_t u) const noexcept {
  return alive_[u] != 0 && lost_[u] + overlay_[u] < alpha_;
}

void BatchState::speculate(std::uint32_t u) {
  if (overlay_[u] == 0) overlay_log_.push_back(u);
  ++overlay_[u];
}

void BatchState::rollback() {
  for (const std::uint32_t u : overlay_log_) overlay_[u] = 0;
  overlay_log_.clear();
}

bool BatchState::halve_while_needed() {
  bool halved = false;
  while (effective_ > 1 && num_alive_ < 2 * effective_ + 2 * alpha_) {
    effective_ /= 2;
    halved = true;
  }
  return halved;
}

void BatchState::increase_loss(PlayerId v) {
  if (!alive(v)) {
    throw Error(ErrorKind::internal,
                "loss charged to eliminated player " + std::to_string(v.index));
  }
  if (++lost_[v.index] < alpha_) return;
  alive_[v.index] = 0;
  const std::uint32_t p = prev_[v.index];
  const std::uint32_t q = next_[v.index];
  if (p == end()) {
    head_ = q;
  } else {
    next_[p] = q;
  }
  if (q != end()) prev_[q] = p;
  --num_alive_;
}

BatchPlan build_batch(BatchState& state, const ComparisonOracle* known) {
  BatchPlan plan;
  const std::uint32_t end = state.end();
  auto& first = state.cursor_first_;
  auto& second = state.cursor_second_;
  bool wrapped = false;
  bool found_since_wrap = false;

  while (plan.pairs.size() < state.effective_) {
    if (first == end) {
      // A whole pass from the head without a pick means no unplayed pair is
      // left among the locally alive players.
      if (wrapped && !found_since_wrap) break;
      wrapped = true;
      found_since_wrap = false;
      first = state.first_alive();
      if (first == end) break;
      second = state.next_alive(first);
      continue;
    }
    if (!state.locally_alive(first) || second == end) {
      first = state.next_alive(first);
      second = first == end ? end : state.next_alive(first);
      continue;
    }
    const PlayerId u(first);
    const PlayerId v(second);
    if (!state.locally_alive(second) || state.played(u, v)) {
      second = state.next_alive(second);
      continue;
    }
    state.mark_played(u, v);
    found_since_wrap = true;
    std::optional<PlayerId> winner;
    if (known != nullptr) winner = known->cached_winner(u, v);
    if (winner) {
      plan.known.push_back({{u, v}, *winner});
      state.speculate(*winner == u ? v.index : u.index);
    } else {
      plan.pairs.push_back({u, v});
      state.speculate(u.index);
      state.speculate(v.index);
    }
    second = state.next_alive(second);
  }
  plan.scheduled = plan.pairs.size();
  state.rollback();
  return plan;
}

BatchPlan fill_batch_heuristic(const BatchState& state, BatchPlan plan, std::size_t batch_size,
                               ArcLedger& ledger) {
  if (plan.pairs.size() >= batch_size) return plan;
  std::unordered_set<std::uint64_t> reserved;
  for (const auto& [u, v] : plan.pairs) reserved.insert(pair_key(u, v));

  using Key = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> by_losses;
  for (std::uint32_t u = 0; u < state.size(); ++u) by_losses.emplace(state.lost(PlayerId(u)), u);

  while (plan.pairs.size() < batch_size && !by_losses.empty()) {
    const PlayerId u(by_losses.top().second);
    const auto w = ledger.next_unprobed(u, reserved);
    if (!w) {
      by_losses.pop();
      continue;
    }
    plan.pairs.push_back({u, *w});
    reserved.insert(pair_key(u, *w));
  }
  return plan;
}

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

struct BruteForceOutcome {
  std::vector<std::int64_t> losses;
  std::uint64_t calls = 0;
};

/// Loss counts of `candidates` computed in batches of `batch_size` arcs. In
/// capped mode a candidate stops once it reaches alpha losses, so only counts
/// below alpha are exact.
BruteForceOutcome parallel_brute_force(ComparisonOracle& oracle, const BatchState& state,
                                       const std::vector<PlayerId>& candidates,
                                       const BatchedOptions& options, bool fill, ArcLedger& ledger) {
  const std::size_t n = oracle.size();
  const std::size_t m = candidates.size();
  const auto alpha = static_cast<std::int64_t>(state.alpha());
  std::unordered_map<std::uint32_t, std::size_t> slot;
  for (std::size_t i = 0; i < m; ++i) slot.emplace(candidates[i].index, i);

  BruteForceOutcome out;
  out.losses.assign(m, 0);
  std::vector<std::uint32_t> next(m, 0);
  std::unordered_set<std::uint64_t> resolved;

  auto account = [&](PlayerId a, PlayerId b, PlayerId winner) {
    if (!resolved.insert(pair_key(a, b)).second) return;
    const PlayerId loser = winner == a ? b : a;
    if (auto it = slot.find(loser.index); it != slot.end()) ++out.losses[it->second];
  };
  auto wants_more = [&](std::size_t i) {
    return next[i] < n &&
           (options.brute_force == BruteForceMode::exhaustive || out.losses[i] < alpha);
  };

  for (;;) {
    BatchPlan plan;
    std::unordered_set<std::uint64_t> in_batch;
    for (bool added = true; added && plan.pairs.size() < options.batch_size;) {
      added = false;
      for (std::size_t i = 0; i < m && plan.pairs.size() < options.batch_size; ++i) {
        const PlayerId u = candidates[i];
        // Absorb whatever is already known before spending a slot.
        while (next[i] < n) {
          const PlayerId w(next[i]);
          if (w == u || resolved.contains(pair_key(u, w)) || in_batch.contains(pair_key(u, w))) {
            ++next[i];
            continue;
          }
          if (auto cached = oracle.cached_winner(u, w)) {
            account(u, w, *cached);
            ++next[i];
            continue;
          }
          break;
        }
        if (!wants_more(i)) continue;
        const PlayerId w(next[i]++);
        plan.pairs.push_back({u, w});
        in_batch.insert(pair_key(u, w));
        added = true;
      }
    }
    if (plan.pairs.empty()) break;
    plan.scheduled = plan.pairs.size();
    if (fill && plan.pairs.size() < options.batch_size) {
      plan = fill_batch_heuristic(state, std::move(plan), options.batch_size, ledger);
    }
    const std::vector<PlayerId> winners = oracle.probe_batch(plan.pairs);
    ++out.calls;
    for (std::size_t j = 0; j < plan.pairs.size(); ++j) {
      ledger.record(plan.pairs[j].first, plan.pairs[j].second);
      account(plan.pairs[j].first, plan.pairs[j].second, winners[j]);
    }
  }
  return out;
}

}  // namespace

BatchedReport find_champions_batched(ComparisonOracle& oracle, const BatchedOptions& options) {
  if (options.batch_size < 1) {
    throw Error(ErrorKind::invalid_batch_size, "batch size must be at least 1, got " +
                                                   std::to_string(options.batch_size));
  }
  const std::size_t n = oracle.size();
  if (n == 0) throw Error(ErrorKind::invalid_spec, "tournament has no players");
  oracle.set_memoize(options.memoize);
  const bool fill = options.memoize && options.batch_fill;
  const bool check_window = is_power_of_two(options.batch_size);
  const LookupStats start = oracle.stats();
  ArcLedger ledger(n);

  BatchedReport report;
  BatchDiagnostics& diag = report.diagnostics;
  for (std::uint64_t alpha = 1;; alpha *= 2) {
    const std::uint64_t round_start = oracle.stats().comparisons;
    RoundBatchCalls calls{alpha, 0, 0};
    BatchState state(n, alpha, options.batch_size);

    auto charge = [&](PlayerId loser) {
      if (!state.alive(loser)) {
        ++diag.discarded_results;
        return;
      }
      state.increase_loss(loser);
      if (state.lost(loser) > alpha) ++diag.loss_cap_violations;
    };

    bool halving_started = false;
    while (state.num_alive() > 6 * alpha) {
      if (state.halve_while_needed()) halving_started = true;
      if (halving_started && check_window) {
        const std::size_t a = state.num_alive();
        const std::size_t b = state.effective_batch_size();
        if (a < 2 * b + 2 * alpha || a > 4 * b + 2 * alpha) ++diag.halving_window_violations;
      }
      BatchPlan plan = build_batch(state, options.memoize ? &oracle : nullptr);
      if (plan.empty()) break;
      if (fill && !plan.pairs.empty() && plan.pairs.size() < options.batch_size) {
        plan = fill_batch_heuristic(state, std::move(plan), options.batch_size, ledger);
      }
      std::vector<PlayerId> winners;
      if (!plan.pairs.empty()) {
        winners = oracle.probe_batch(plan.pairs);
        ++calls.elimination_calls;
      }
      for (const auto& [u, v] : plan.pairs) ledger.record(u, v);
      for (std::size_t j = 0; j < plan.scheduled; ++j) {
        const auto& [u, v] = plan.pairs[j];
        charge(winners[j] == u ? v : u);
      }
      for (const auto& k : plan.known) charge(k.winner == k.pair.first ? k.pair.second : k.pair.first);
    }

    const std::vector<PlayerId> candidates = state.alive_players();
    const BruteForceOutcome brute =
        parallel_brute_force(oracle, state, candidates, options, fill, ledger);
    calls.brute_force_calls = brute.calls;
    diag.elimination_calls += calls.elimination_calls;
    diag.brute_force_calls += calls.brute_force_calls;
    diag.per_round.push_back(calls);
    report.stats.per_alpha.push_back({alpha, oracle.stats().comparisons - round_start});

    const std::int64_t best = *std::min_element(brute.losses.begin(), brute.losses.end());
    if (best < static_cast<std::int64_t>(alpha)) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (brute.losses[i] == best) report.champions.push_back(candidates[i]);
      }
      std::sort(report.champions.begin(), report.champions.end());
      report.losses = best;
      report.final_alpha = alpha;
      break;
    }
  }
  auto per_alpha = std::move(report.stats.per_alpha);
  report.stats = oracle.stats().since(start);
  report.stats.per_alpha = std::move(per_alpha);
  return report;
}

}  // namespace tourney
