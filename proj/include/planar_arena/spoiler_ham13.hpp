#pragma once

// Spoiler's 1:3 strategy against Hamiltonicity. Spoiler grows one component
// H whose outer face is a 3-cycle and fans every vertex Builder brings to the
// outer face onto that triangle, trapping one isolated vertex in each of the
// two new inner faces. The fan centres form S; at the end G - S has more
// than |S| components.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "planar_arena/edge_strategy.hpp"

namespace parena {

struct SpoilerLedger {
  std::vector<int> tracked;  // S
  int hub = -1;              // a vertex of H
  int victims = 0;           // vertices trapped in faces of the tracked triangulation
  int victimless_faces = 1;  // the outer face of the tracked triangulation
};

class SpoilerHam13 : public EdgeStrategy {
public:
  std::string name() const override { return "spoiler-ham13"; }
  const SpoilerLedger& ledger() const { return ledger_; }

  DrawMove next(const PlaneState& s, const History& h) override {
    const bool turn_start = h.empty() || h.back().player != Player::spoiler;
    if (turn_start) {
      queue_.clear();
      plan(s, h);
    }
    if (!queue_.empty()) {
      DrawMove m = queue_.front();
      queue_.pop_front();
      return m;
    }
    // Waiting or arbitrary moves.
    return make_move(s, s.legal_edge_slots().front());
  }

private:
  using Goal = std::function<bool(const PlaneState&)>;

  // Plans up to three moves on a scratch copy; stops at the first step that
  // cannot be realised.
  bool push(PlaneState& t, int a, int b, const Goal& goal, const std::vector<int>& special = {}) {
    if (t.is_complete()) return false;
    auto m = find_move(t, a, b, goal, special);
    if (!m) return false;
    t.place(*m, Player::spoiler);
    queue_.push_back(*m);
    return true;
  }

  static std::set<int> outer_set(const PlaneState& t, int v) {
    auto w = outer_walk(t, v);
    return {w.begin(), w.end()};
  }

  // The outer face of H is `want` and exactly `trapped` left the global region.
  static Goal shape(int hub, std::set<int> want, std::vector<int> outer_iso, std::vector<int> trapped) {
    std::vector<int> stay;
    for (int x : outer_iso)
      if (std::find(trapped.begin(), trapped.end(), x) == trapped.end()) stay.push_back(x);
    return [=](const PlaneState& t) {
      if (outer_set(t, hub) != want || outer_walk(t, hub).size() != want.size()) return false;
      return isolated_in(t, kGlobalRegion) == stay;
    };
  }

  void plan(const PlaneState& s, const History& h) {
    PlaneState t = s;
    auto outer_iso = isolated_in(s, kGlobalRegion);
    if (ledger_.tracked.empty()) {
      open(t, h, outer_iso);
      return;
    }
    const int hub = ledger_.hub;
    int bi = last_move_by(h, Player::builder);
    std::optional<Edge> built;
    if (bi >= 0) built = Edge{h[bi].move.u, h[bi].move.v};

    int x = -1;          // new fan centre
    int touched = -1;    // triangle vertex Builder used, if any
    int pendant = -1;    // Builder's second new vertex (joined to x)
    auto around = outer_set(s, hub);
    if (built) {
      auto [p, q] = *built;
      auto fresh = [&](int a) {
        return s.component_of(a) == s.component_of(hub) && s.degree(a) == 1 && around.count(a);
      };
      // Builder joined an outer isolated vertex to the triangle: {x, u}.
      if (fresh(p) && around.count(q)) x = p, touched = q;
      else if (fresh(q) && around.count(p)) x = q, touched = p;
      // Builder joined two outer isolated vertices: {x, y}.
      else if (s.component_of(p) != s.component_of(hub) && s.component_vertices(p).size() == 2 &&
               s.container_face(s.component_of(p)) == kGlobalRegion)
        x = std::min(p, q), pendant = std::max(p, q);
    }
    if (touched >= 0) around.erase(x);
    std::vector<int> tri(around.begin(), around.end());
    if (tri.size() != 3 || outer_walk(s, hub).size() != (touched >= 0 ? 5u : 3u)) {
      queue_.push_back(fallback(s, "outer face of the tracked component is not a 3-cycle"));
      return;
    }
    if (x < 0 && !outer_iso.empty()) x = outer_iso.front();
    if (x < 0) return;  // arbitrary from here on

    std::vector<int> pool;
    for (int y : outer_iso)
      if (y != x) pool.push_back(y);
    int u = touched >= 0 ? touched : tri[0];
    std::vector<int> vw;
    for (int y : tri)
      if (y != u) vw.push_back(y);
    const int v = vw[0], w = vw[1];
    int trapped = 0;

    if (touched < 0) {
      // Attach x to u first (Builder did not).
      if (!push(t, x, u, [&](const PlaneState& r) { return r.component_of(x) == r.component_of(hub); })) {
        queue_.push_back(fallback(s, "cannot attach the fan centre"));
        return;
      }
    }
    std::vector<int> iso_now = isolated_in(t, kGlobalRegion);
    // First fan edge {x, v}: traps the pendant, or one isolated vertex.
    std::vector<int> first;
    if (pendant >= 0) ++trapped;
    else if (!pool.empty()) first.push_back(pool.front());
    std::set<int> mid{x, u, v, w};
    if (push(t, x, v, shape(hub, mid, iso_now, first), first)) {
      trapped += static_cast<int>(first.size());
      iso_now = isolated_in(t, kGlobalRegion);
      std::vector<int> second;
      for (int y : iso_now)
        if (second.empty()) second.push_back(y);
      Goal last = [&, second](const PlaneState& r) {
        auto o = outer_set(r, hub);
        if (o.size() != 3 || !o.count(x) || !o.count(w) || outer_walk(r, hub).size() != 3) return false;
        std::vector<int> stay;
        for (int y : iso_now)
          if (std::find(second.begin(), second.end(), y) == second.end()) stay.push_back(y);
        return isolated_in(r, kGlobalRegion) == stay;
      };
      if (push(t, x, w, last, second)) {
        trapped += static_cast<int>(second.size());
        if (trapped > 0) {
          ledger_.tracked.push_back(x);
          ledger_.victims += trapped;
          ledger_.victimless_faces += 2 - trapped;
        }
        // Waiting move inside the first new face.
        if (queue_.size() < 3 && !first.empty()) push(t, x, first.front(), [](const PlaneState&) { return true; });
        return;
      }
    }
    if (queue_.empty()) queue_.push_back(fallback(s, "fan onto the outer triangle failed"));
  }

  // The opening 3-cycle around one vertex.
  void open(PlaneState& t, const History& h, const std::vector<int>& outer_iso) {
    int bi = last_move_by(h, Player::builder);
    int a, b, c, inside;
    std::vector<int> trap;
    if (bi < 0) {
      if (outer_iso.size() < 4) return;
      a = outer_iso[0], b = outer_iso[1], c = outer_iso[2], inside = outer_iso[3];
      trap = {inside};
    } else {
      a = h[bi].move.u, inside = h[bi].move.v;
      std::vector<int> pool;
      for (int y : outer_iso)
        if (y != a && y != inside) pool.push_back(y);
      if (pool.size() < 2) return;
      b = pool[0], c = pool[1];
    }
    auto any = [](const PlaneState&) { return true; };
    if (!push(t, a, b, any) || !push(t, b, c, any)) return;
    std::vector<int> iso = isolated_in(t, kGlobalRegion);
    if (!push(t, c, a, shape(a, {a, b, c}, iso, trap), trap)) return;
    ledger_.tracked = {a, b, c};
    ledger_.hub = a;
    ledger_.victims = 1;
  }

  SpoilerLedger ledger_;
  std::deque<DrawMove> queue_;
};

}  // namespace parena
