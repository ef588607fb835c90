#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tourney/oracle.hpp"

namespace tourney::detail {

template <typename Loss>
struct EliminationOutcome {
  std::vector<PlayerId> alive;
  std::vector<Loss> lost;
  // Set when a full pass over the alive set found no unplayed pair. Cannot
  // happen on a tournament; the caller falls back to brute force.
  bool exhausted = false;
};

/// One elimination tournament: plays unplayed pairs of alive players in the
/// order chosen by `AliveSet` until at most `stop_size` remain. A player is
/// removed as soon as its counter reaches `alpha`.
///
/// `play(u, v)` returns the loss increments (for u, for v).
template <typename AliveSet, typename Loss, typename Play, typename OnEliminate>
EliminationOutcome<Loss> run_elimination(std::size_t n, Loss alpha, std::size_t stop_size,
                                         Play&& play, OnEliminate&& on_eliminate) {
  AliveSet alive(n);
  EliminationOutcome<Loss> out;
  out.lost.assign(n, Loss{0});
  std::unordered_set<std::uint64_t> played;
  bool progress = false;

  while (alive.size() > stop_size) {
    const auto pair = alive.current();
    if (!pair) {
      if (!progress) {
        out.exhausted = true;
        break;
      }
      progress = false;
      alive.wrap();
      continue;
    }
    const auto [u, v] = *pair;
    if (!played.insert(pair_key(u, v)).second) {
      alive.skip();
      continue;
    }
    progress = true;
    const auto [du, dv] = play(u, v);
    out.lost[u.index] += du;
    out.lost[v.index] += dv;
    const bool u_dead = out.lost[u.index] >= alpha;
    const bool v_dead = out.lost[v.index] >= alpha;
    if (v_dead) on_eliminate(v);
    if (u_dead) on_eliminate(u);
    alive.after_match(u_dead, v_dead);
  }
  out.alive = alive.players();
  return out;
}

}  // namespace tourney::detail
