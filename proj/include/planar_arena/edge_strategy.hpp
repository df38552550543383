#pragma once

// Strategy contract for the edge drawing game and the small planning kit the
// named strategies share: enumerate every routing of a given edge, apply it
// to a copy, and keep the first (or best) one whose result has the shape the
// strategy asks for.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planar_arena/plane.hpp"

namespace parena {

struct HistoryEntry {
  Player player;
  DrawMove move;
};
using History = std::vector<HistoryEntry>;

class EdgeStrategy {
public:
  virtual ~EdgeStrategy() = default;
  virtual std::string name() const = 0;
  /// One move for the player to move in `s`. Called once per owed move.
  virtual DrawMove next(const PlaneState& s, const History& h) = 0;

  bool strict = false;
  int fallbacks = 0;
  std::vector<std::string> events;

protected:
  /// First legal slot in canonical order, residents kept on the right.
  DrawMove fallback(const PlaneState& s, const std::string& why) {
    if (strict) fail(errc::strategy_confused, name() + ": " + why);
    ++fallbacks;
    events.push_back(why);
    auto slots = s.legal_edge_slots();
    if (slots.empty()) fail(errc::game_over, "no legal move");
    return make_move(s, slots.front());
  }
};

/// Replays the first `count` entries of `h` on a fresh board shaped like `s`.
inline PlaneState replay(const PlaneState& s, const History& h, std::size_t count) {
  PlaneState out(s.n(), s.turn().schedule);
  for (std::size_t i = 0; i < count && i < h.size(); ++i) out.place(h[i].move, h[i].player);
  return out;
}

/// Index of the last history entry made by `p`, or -1.
inline int last_move_by(const History& h, Player p) {
  for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i)
    if (h[i].player == p) return i;
  return -1;
}

/// Regions in which v has a corner.
inline std::vector<int> regions_of(const PlaneState& s, int v) {
  std::set<int> out;
  if (s.is_isolated(v)) return {s.container_face(v)};
  const auto& f = s.faces();
  for (int d : s.rotation(v)) {
    int face = f.face_of[d];
    out.insert(f.outer[face] ? s.container_face(f.rep[face]) : face);
  }
  return {out.begin(), out.end()};
}

/// Every slot drawing {a, b}.
inline std::vector<Slot> slots_for(const PlaneState& s, int a, int b) {
  std::vector<Slot> out;
  if (a == b || s.has_edge(a, b) || s.is_complete()) return out;
  auto ra = regions_of(s, a), rb = regions_of(s, b);
  for (int r : ra) {
    if (!std::binary_search(rb.begin(), rb.end(), r)) continue;
    int ca = static_cast<int>(s.corners_of(r, a).size());
    int cb = static_cast<int>(s.corners_of(r, b).size());
    for (int i = 0; i < ca; ++i)
      for (int j = 0; j < cb; ++j) out.push_back({a, b, r, i, j});
  }
  return out;
}

/// Routings of a slot: residents all on one side, or `special` on one side
/// and everyone else on the other; both outer sides when that is a choice.
inline std::vector<DrawMove> routings(const PlaneState& s, const Slot& slot, const std::vector<int>& special = {}) {
  DrawMove base{slot.u, slot.v, slot.region, slot.corner_u, slot.corner_v, {}, {}, -1};
  if (!s.is_split(slot)) return {base};
  auto res = s.split_residents(slot);
  std::vector<int> sp;
  for (int x : special) {
    int r = s.component_of(x);
    if (std::find(res.begin(), res.end(), r) != res.end() && std::find(sp.begin(), sp.end(), r) == sp.end())
      sp.push_back(r);
  }
  std::sort(sp.begin(), sp.end());
  std::vector<int> rest;
  for (int r : res)
    if (!std::binary_search(sp.begin(), sp.end(), r)) rest.push_back(r);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> parts{{{}, res}, {res, {}}};
  if (!sp.empty() && !rest.empty()) {
    parts.push_back({sp, rest});
    parts.push_back({rest, sp});
  }
  std::vector<DrawMove> out;
  const bool sided = s.split_needs_outer_side(slot);
  for (const auto& [l, r] : parts)
    for (int side = 0; side < (sided ? 2 : 1); ++side) {
      DrawMove m = base;
      m.left = l;
      m.right = r;
      m.outer_side = sided ? side : -1;
      out.push_back(std::move(m));
    }
  if (res.empty()) out.resize(sided ? 2 : 1);
  return out;
}

inline std::vector<DrawMove> routings(const PlaneState& s, int a, int b, const std::vector<int>& special = {}) {
  std::vector<DrawMove> out;
  for (const auto& slot : slots_for(s, a, b)) {
    auto r = routings(s, slot, special);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

using StatePredicate = std::function<bool(const PlaneState&)>;

/// First routing of {a, b} whose result satisfies `goal`.
inline std::optional<DrawMove> find_move(const PlaneState& s, int a, int b, const StatePredicate& goal,
                                         const std::vector<int>& special = {}) {
  for (const auto& m : routings(s, a, b, special)) {
    PlaneState t = s;
    t.place(m, Player::builder);
    if (goal(t)) return m;
  }
  return std::nullopt;
}

/// Scores a state after a sequence of planned moves; nullopt rejects it.
using PlanScore = std::function<std::optional<long>(const PlaneState&)>;

/// Lowest-scoring two-move realisation over the candidate edge pairs, first
/// found wins ties. Each candidate is {first edge, second edge}.
inline std::optional<std::vector<DrawMove>> plan_pair(const PlaneState& s,
                                                      const std::vector<std::pair<Edge, Edge>>& candidates,
                                                      const PlanScore& score, const std::vector<int>& special = {}) {
  std::optional<std::vector<DrawMove>> best;
  long best_score = 0;
  for (const auto& [e1, e2] : candidates) {
    for (const auto& m1 : routings(s, e1.first, e1.second, special)) {
      PlaneState t = s;
      t.place(m1, Player::builder);
      auto second = routings(t, e2.first, e2.second, special);
      if (t.is_complete()) second.clear();
      for (const auto& m2 : second) {
        PlaneState w = t;
        w.place(m2, Player::builder);
        auto sc = score(w);
        if (sc && (!best || *sc < best_score)) {
          best = std::vector<DrawMove>{m1, m2};
          best_score = *sc;
        }
      }
    }
    if (best && best_score == 0) break;
  }
  return best;
}

/// Vertex set of a face walk, sorted.
inline std::vector<int> face_vertices(const PlaneState& s, int face) {
  std::vector<int> vs;
  for (int d : s.faces().walks[face]) vs.push_back(s.tail(d));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Inner face bounded by exactly the 3-cycle on {a, b, c}, or -1.
inline int triangle_face(const PlaneState& s, int a, int b, int c, bool inner_only = true) {
  std::vector<int> want{a, b, c};
  std::sort(want.begin(), want.end());
  const auto& f = s.faces();
  for (int d : s.rotation(a)) {
    int face = f.face_of[d];
    if (f.walks[face].size() != 3 || (inner_only && f.outer[face])) continue;
    if (face_vertices(s, face) == want) return face;
  }
  return -1;
}

/// Vertices of the component's outer face walk in walk order (empty for an
/// isolated vertex).
inline std::vector<int> outer_walk(const PlaneState& s, int rep) {
  std::vector<int> out;
  int f = s.outer_face(s.component_of(rep));
  if (f < 0) return out;
  for (int d : s.faces().walks[f]) out.push_back(s.tail(d));
  return out;
}

/// Isolated vertices residing in `region`, ascending.
inline std::vector<int> isolated_in(const PlaneState& s, int region) {
  std::vector<int> out;
  for (int r : s.residents(region))
    if (s.is_isolated(r)) out.push_back(r);
  return out;
}

/// Faces touched by the last `k` edges.
inline std::vector<int> new_faces(const PlaneState& s, int k) {
  std::set<int> out;
  const auto& f = s.faces();
  for (int e = s.move_count() - k; e < s.move_count(); ++e) {
    out.insert(f.face_of[2 * e]);
    out.insert(f.face_of[2 * e + 1]);
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Adversaries.

/// Uniform over legal slots, random partition and outer side.
class RandomEdgePlayer : public EdgeStrategy {
public:
  explicit RandomEdgePlayer(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }

  DrawMove next(const PlaneState& s, const History&) override {
    auto slots = s.legal_edge_slots();
    if (slots.empty()) fail(errc::game_over, "no legal move");
    return randomize(s, slots[pick(slots.size())]);
  }

protected:
  DrawMove randomize(const PlaneState& s, const Slot& slot) {
    DrawMove m{slot.u, slot.v, slot.region, slot.corner_u, slot.corner_v, {}, {}, -1};
    if (!s.is_split(slot)) return m;
    for (int r : s.split_residents(slot)) (pick(2) ? m.left : m.right).push_back(r);
    if (s.split_needs_outer_side(slot)) m.outer_side = static_cast<int>(pick(2));
    return m;
  }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

/// Tries to strand isolated vertices: among a sample of slots, prefers the
/// split that puts the most isolated vertices into the shorter successor
/// face. Seeded tie-break.
class GreedyBlocker : public RandomEdgePlayer {
public:
  explicit GreedyBlocker(std::uint64_t seed, std::size_t sample = 48) : RandomEdgePlayer(seed), sample_(sample) {}
  std::string name() const override { return "greedy-blocker"; }

  DrawMove next(const PlaneState& s, const History&) override {
    auto slots = s.legal_edge_slots();
    if (slots.empty()) fail(errc::game_over, "no legal move");
    std::shuffle(slots.begin(), slots.end(), rng_);
    if (slots.size() > sample_) slots.resize(sample_);
    std::optional<DrawMove> best;
    std::pair<int, int> best_key{-1, 0};
    for (const auto& slot : slots) {
      if (!s.is_split(slot)) continue;
      auto res = s.split_residents(slot);
      int isolated = 0;
      for (int r : res) isolated += s.is_isolated(r);
      if (isolated == 0) continue;
      for (const auto& m : routings(s, slot)) {
        if (m.left.empty() && m.right.empty()) continue;
        PlaneState t = s;
        t.place(m, Player::spoiler);
        const auto& f = t.faces();
        int a = f.face_of[2 * (t.move_count() - 1)], b = f.face_of[2 * (t.move_count() - 1) + 1];
        int holder = m.left.empty() ? b : a;
        int other_face = holder == a ? b : a;
        if (f.outer[holder]) continue;
        std::pair<int, int> key{isolated, static_cast<int>(f.walks[other_face].size()) -
                                              static_cast<int>(f.walks[holder].size())};
        if (key > best_key) {
          best_key = key;
          best = m;
        }
      }
    }
    if (best) return *best;
    return randomize(s, slots.front());
  }

private:
  std::size_t sample_;
};

/// Builder aiming at a fixed pattern on vertices 0..k-1: draws a missing
/// pattern edge when one is drawable (random routing), otherwise plays
/// randomly. "targeted-octahedron" uses the octahedron.
class TargetedBuilder : public RandomEdgePlayer {
public:
  TargetedBuilder(Graph pattern, std::string label, std::uint64_t seed)
      : RandomEdgePlayer(seed), pattern_(std::move(pattern)), label_(std::move(label)) {}
  std::string name() const override { return label_; }

  DrawMove next(const PlaneState& s, const History& h) override {
    std::vector<Slot> wanted;
    for (auto [a, b] : pattern_.edges()) {
      if (a >= s.n() || b >= s.n()) continue;
      auto slots = slots_for(s, a, b);
      wanted.insert(wanted.end(), slots.begin(), slots.end());
    }
    if (wanted.empty()) return RandomEdgePlayer::next(s, h);
    return randomize(s, wanted[pick(wanted.size())]);
  }

private:
  Graph pattern_;
  std::string label_;
};

}  // namespace parena
