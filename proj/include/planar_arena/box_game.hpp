#pragma once

// The (1+eps):1 box game on m disjoint boxes of n cells, and Maker's
// level-by-level strategy: at level k put a (k+1)-th mark into
// (q+1)^(n-1-k) boxes that are still untouched by Breaker.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <vector>

#include "planar_arena/schedule.hpp"

namespace parena {

struct BoxGameState {
  int m = 0, n = 0, q = 1;
  std::vector<int> maker;    // Maker cells per box
  std::vector<int> breaker;  // Breaker cells per box

  BoxGameState() = default;
  BoxGameState(int m_, int n_, int q_) : m(m_), n(n_), q(q_), maker(m_, 0), breaker(m_, 0) {
    if (m < 1 || n < 1 || q < 1) fail(errc::invalid_parameter, "box game needs m, n, q >= 1");
  }

  bool dead(int i) const { return breaker[i] > 0; }
  bool maker_wins() const {
    for (int i = 0; i < m; ++i)
      if (!dead(i) && maker[i] >= n) return true;
    return false;
  }
  bool full(int i) const { return maker[i] + breaker[i] >= n; }
};

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Boxes Maker's strategy needs: (q+1)^(n-1).
inline long long box_threshold(int n, int q) { return ipow(q + 1, n - 1); }

/// Maker's next box, or -1 when no live box can take a mark.
inline int box_maker_move(const BoxGameState& b) {
  // One pass: boxes holding exactly k marks, and the first live one of them.
  std::vector<long long> exactly(static_cast<std::size_t>(b.n) + 1, 0);
  std::vector<int> first(static_cast<std::size_t>(b.n) + 1, -1);
  for (int i = 0; i < b.m; ++i) {
    int k = std::min(b.maker[i], b.n);
    ++exactly[k];
    if (first[k] < 0 && !b.dead(i)) first[k] = i;
  }
  long long have = 0;  // boxes with at least k + 1 marks
  for (int k = b.n - 1; k >= 0; --k) have += exactly[k + 1];
  for (int k = 0; k < b.n; ++k) {
    if (k > 0) have -= exactly[k];
    if (have >= ipow(b.q + 1, b.n - 1 - k)) continue;
    if (first[k] >= 0) return first[k];
    // Breaker killed every remaining candidate: the survivors already
    // cover the next level.
  }
  // Fallback: the live box closest to completion.
  int best = -1;
  for (int i = 0; i < b.m; ++i)
    if (!b.dead(i) && !b.full(i) && (best < 0 || b.maker[i] > b.maker[best])) best = i;
  return best;
}

/// Full game tree against every Breaker reply, Maker first, Maker getting an
/// extra move on every q-th turn. True when Maker's strategy always wins.
inline bool maker_always_wins(int m, int n, int q, std::uint64_t* nodes = nullptr) {
  BiasSchedule sched = BiasSchedule::one_plus_epsilon(1.0 / q);
  std::uint64_t count = 0;
  std::function<bool(BoxGameState, TurnTracker)> play = [&](BoxGameState b, TurnTracker t) -> bool {
    ++count;
    if (b.maker_wins()) return true;
    if (t.to_move == Player::builder) {
      int i = box_maker_move(b);
      if (i < 0) return false;
      ++b.maker[i];
      t.advance();
      return play(b, t);
    }
    // Breaker: any free cell; cells of one box are interchangeable.
    bool any = false;
    for (int i = 0; i < b.m; ++i) {
      if (b.full(i)) continue;
      any = true;
      BoxGameState c = b;
      ++c.breaker[i];
      TurnTracker u = t;
      u.advance();
      if (!play(c, u)) return false;
    }
    if (!any) return b.maker_wins();
    return true;
  };
  bool ok = play(BoxGameState(m, n, q), TurnTracker(sched));
  if (nodes) *nodes = count;
  return ok;
}

}  // namespace parena
