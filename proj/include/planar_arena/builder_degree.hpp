#pragma once

// Builder's 1:1 strategy for a vertex of linear Builder-degree in a graph of
// constant diameter. Builder nominates v and keeps every isolated vertex in
// a face that has a corner at v (an active face), drawing {u, v} for an
// isolated u whenever that is safe (a default move). When Spoiler threatens
// to wall isolated vertices off from v with a single chord, Builder answers
// with the move that leaves the smallest such threat. Once no default move
// is left, Builder joins v to the farthest vertex he still can.

#include <algorithm>
#include <array>
#include <tuple>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include "planar_arena/edge_strategy.hpp"

namespace parena {

/// A face holding isolated vertices and a corner of the nominated vertex,
/// decomposed as P(H, N, M): H the component of v, N the spokes of v that
/// end inside the face, M the stray edges resident in it.
struct ActiveFaceRecord {
  int region = kGlobalRegion;
  int component = -1;
  std::vector<int> spokes;
  std::vector<Edge> matching;
  std::vector<int> isolated;
};

namespace degree {

inline bool has_corner(const PlaneState& s, int region, int v) {
  auto rs = regions_of(s, v);
  return std::find(rs.begin(), rs.end(), region) != rs.end();
}

/// Some chord of `walk` (cyclic vertex sequence) bounds a side without
/// `avoid` (pass -1 to accept any chord).
inline bool has_cut_chord(const PlaneState& s, const std::vector<int>& walk, int avoid) {
  const int L = static_cast<int>(walk.size());
  if (L < 4) return false;
  auto chord = [&](int i, int j) {
    return walk[i] != walk[j] && !s.has_edge(walk[i], walk[j]);
  };
  if (avoid < 0 || std::find(walk.begin(), walk.end(), avoid) == walk.end()) {
    for (int i = 0; i < L; ++i)
      for (int j = i + 2; j < L; ++j)
        if (chord(i, j)) return true;
    return false;
  }
  // Maximal runs of positions whose vertex is not `avoid`.
  int start = static_cast<int>(std::find(walk.begin(), walk.end(), avoid) - walk.begin());
  std::vector<int> run;
  for (int k = 1; k <= L; ++k) {
    int p = (start + k) % L;
    if (walk[p] == avoid) {
      for (std::size_t i = 0; i < run.size(); ++i)
        for (std::size_t j = i + 2; j < run.size(); ++j)
          if (chord(run[i], run[j])) return true;
      run.clear();
    } else {
      run.push_back(p);
    }
  }
  return false;
}

inline std::vector<int> walk_vertices(const PlaneState& s, int face) {
  std::vector<int> out;
  for (int d : s.faces().walks[face]) out.push_back(s.tail(d));
  return out;
}

/// Whether one Spoiler edge inside `region` can leave its isolated vertices
/// in a face with no corner at v.
inline bool can_cut(const PlaneState& s, int region, int v) {
  const int vc = s.component_of(v);
  for (int rep : s.residents(region)) {
    if (s.is_isolated(rep)) continue;
    if (has_cut_chord(s, outer_walk(s, rep), rep == vc ? v : -1)) return true;
  }
  int owner = s.container_of_region(region);
  if (owner >= 0) return has_cut_chord(s, walk_vertices(s, region), owner == vc ? v : -1);
  return false;
}

struct Exposure {
  int lost = 0;    // isolated vertices with no corner of v in their region
  int threat = 0;  // most isolated vertices one Spoiler edge can cut off
};

inline Exposure exposure(const PlaneState& s, int v) {
  std::map<int, int> count;
  for (int x = 0; x < s.n(); ++x)
    if (s.is_isolated(x) && x != v) ++count[s.container_face(x)];
  auto vr = regions_of(s, v);
  Exposure e;
  for (auto [region, k] : count) {
    if (!std::binary_search(vr.begin(), vr.end(), region)) {
      e.lost += k;
      continue;
    }
    if (k > e.threat && can_cut(s, region, v)) e.threat = k;
  }
  return e;
}

}  // namespace degree

inline std::vector<ActiveFaceRecord> active_faces(const PlaneState& s, int v) {
  std::vector<ActiveFaceRecord> out;
  for (int region : regions_of(s, v)) {
    auto iso = isolated_in(s, region);
    iso.erase(std::remove(iso.begin(), iso.end(), v), iso.end());
    if (iso.empty()) continue;
    ActiveFaceRecord r{region, s.component_of(v), {}, {}, iso};
    const Graph g = s.graph();
    for (int y : g.neighbors(v))
      if (s.degree(y) == 1 && degree::has_corner(s, region, y)) r.spokes.push_back(y);
    for (int rep : s.residents(region)) {
      auto vs = s.component_vertices(rep);
      if (vs.size() == 2) r.matching.push_back({vs[0], vs[1]});
    }
    out.push_back(std::move(r));
  }
  return out;
}

class BuilderDegree : public EdgeStrategy {
public:
  explicit BuilderDegree(int nominated = 0) : v_(nominated) {}
  std::string name() const override { return "builder-degree"; }
  int nominated() const { return v_; }

  DrawMove next(const PlaneState& s, const History& h) override {
    if (v_ < 0 || v_ >= s.n()) fail(errc::invalid_parameter, "nominated vertex out of range");
    auto vr = regions_of(s, v_);
    std::vector<DrawMove> defaults;
    for (int region : vr) {
      auto iso = isolated_in(s, region);
      for (int u : iso)
        if (u != v_) {
          for (const auto& m : routings(s, v_, u)) defaults.push_back(m);
          break;
        }
    }
    if (defaults.empty()) return phase_two(s);

    Choice best;
    for (const auto& m : defaults) consider(s, m, true, best);
    if (best.key[0] > degree::exposure(s, v_).lost) {
      for (const auto& m : defences(s, h, vr)) consider(s, m, false, best);
    }
    return best.move;
  }

private:
  struct Choice {
    DrawMove move;
    std::array<int, 3> key{std::numeric_limits<int>::max(), 0, 0};
  };

  void consider(const PlaneState& s, const DrawMove& m, bool is_default, Choice& best) const {
    PlaneState t = s;
    t.place(m, Player::builder);
    auto e = degree::exposure(t, v_);
    std::array<int, 3> key{e.lost + e.threat, is_default ? 0 : 1, e.threat};
    if (key < best.key) best = {m, key};
  }

  // Chords between neighbours of v that wall the isolated vertices of a
  // region into a face at v, away from everything else living there; and
  // edges from Spoiler's last endpoints back to v's neighbours.
  std::vector<DrawMove> defences(const PlaneState& s, const History& h, const std::vector<int>& vr) const {
    std::vector<DrawMove> out;
    const Graph g = s.graph();
    auto add = [&](int a, int b, const std::vector<int>& special) {
      for (auto& m : routings(s, a, b, special)) out.push_back(std::move(m));
    };
    for (int region : vr) {
      auto iso = isolated_in(s, region);
      if (iso.empty()) continue;
      std::vector<int> hull, spokes;
      for (int y : g.neighbors(v_)) {
        if (!degree::has_corner(s, region, y)) continue;
        (s.degree(y) >= 2 ? hull : spokes).push_back(y);
      }
      std::vector<int> all = hull;
      all.insert(all.end(), spokes.begin(), spokes.end());
      if (hull.size() < 2)
        for (std::size_t i = 0; i < spokes.size() && i < 3; ++i) hull.push_back(spokes[i]);
      for (int w : hull)
        for (int z : all)
          if (w < z || std::find(hull.begin(), hull.end(), z) == hull.end()) add(w, z, iso);
      for (const auto& c : s.region_corners(region))
        if (c.vertex != v_ && !s.is_isolated(c.vertex) && !g.has_edge(v_, c.vertex)) add(v_, c.vertex, iso);
    }
    int si = last_move_by(h, Player::spoiler);
    if (si >= 0)
      for (int e : {h[si].move.u, h[si].move.v})
        for (int y : g.neighbors(v_))
          if (y != e) add(e, y, {});
    return out;
  }

  // No isolated vertex can be joined to v any more: play the shortcut with
  // the largest gap in distance from v, preferring edges at v.
  DrawMove phase_two(const PlaneState& s) const {
    const Graph g = s.graph();
    std::vector<int> dist(static_cast<std::size_t>(s.n()), -1);
    std::queue<int> q;
    dist[v_] = 0;
    q.push(v_);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    auto far = [&](int y) { return dist[y] < 0 ? s.n() + 1 : dist[y]; };
    auto slots = s.legal_edge_slots();
    std::optional<Slot> best;
    std::tuple<int, int, int> best_key{-1, 0, 0};
    for (const auto& slot : slots) {
      int lo = std::min(far(slot.u), far(slot.v)), hi = std::max(far(slot.u), far(slot.v));
      std::tuple<int, int, int> key{hi - lo, lo == 0, hi};
      if (key > best_key) {
        best_key = key;
        best = slot;
      }
    }
    return make_move(s, *best);
  }

  int v_;
};

}  // namespace parena
