#pragma once

// Spoiler's 1:1 strategy keeping every component a subgraph of an Apollonian
// network. Each reply closes Builder's new edge into an empty triangle where
// it can (joining an isolated x at u is answered by {x, v}, surrounding w),
// so every non-triangular face left behind has a forced, harmless
// completion. Candidates are scored on a scratch copy: the touched component
// must stay a partial 3-tree, then faces whose completions could leave the
// class are avoided, then open faces are minimised.

#include <algorithm>
#include <iterator>
#include <array>
#include <limits>
#include <map>
#include <vector>

#include "planar_arena/edge_strategy.hpp"
#include "planar_arena/eventually.hpp"
#include "planar_arena/graph_props.hpp"

namespace parena {

namespace p3t {

// Longest empty face whose completions are checked one by one.
inline constexpr int kFaceScan = 7;

/// Every triangulation of `poly` (a face walk of `g`, chords only) keeps `g`
/// a partial 3-tree.
inline bool face_safe(const Graph& g, std::vector<int> poly) {
  static const GraphPredicate pred = [](const Graph& h, const std::vector<int>&) { return is_partial_3tree(h); };
  static const std::vector<int> none;
  return detail::FaceCompleter(g, {std::move(poly)}, pred, none).all();
}

struct Score {
  int broken = 0;  // components that are not partial 3-trees
  int unsafe = 0;  // inner faces with a chord completion leaving the class
  int outer = 0;   // components of 3+ vertices whose outer face is not a 3-cycle
  int open = 0;    // non-triangular inner faces
  int loose = 0;   // components that are single edges
  auto key() const { return std::array<int, 5>{broken, unsafe, outer, open, loose}; }
};

/// Scores the components listed in `reps` (all when empty).
inline Score score(const PlaneState& s, std::vector<int> reps = {}) {
  if (reps.empty()) reps = s.components();
  Score sc;
  const auto& f = s.faces();
  const Graph whole = s.graph();
  for (int rep : reps) {
    auto verts = s.component_vertices(rep);
    if (verts.size() == 2) ++sc.loose;
    if (verts.size() < 3) continue;
    std::vector<int> index(static_cast<std::size_t>(s.n()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    Graph g = whole.induced(verts);
    if (!is_partial_3tree(g)) {
      ++sc.broken;
      continue;
    }
    for (std::size_t face = 0; face < f.walks.size(); ++face) {
      if (f.rep[face] != rep || f.walks[face].size() <= 3) continue;
      ++(f.outer[face] ? sc.outer : sc.open);
      if (f.outer[face]) continue;
      if (static_cast<int>(f.walks[face].size()) > kFaceScan) {
        ++sc.unsafe;
        continue;
      }
      std::vector<int> poly;
      for (int d : f.walks[face]) poly.push_back(index[s.tail(d)]);
      if (!face_safe(g, poly)) ++sc.unsafe;
    }
  }
  return sc;
}

/// Drawable vertex pairs whose edge would take a component out of the
/// class, counted up to `cap`.
inline int threats(const PlaneState& s, int cap = 3) {
  const Graph whole = s.graph();
  std::vector<std::vector<int>> regions(static_cast<std::size_t>(s.n()));
  for (int v = 0; v < s.n(); ++v) regions[v] = regions_of(s, v);
  int count = 0;
  for (int a = 0; a < s.n(); ++a)
    for (int b = a + 1; b < s.n(); ++b) {
      if (whole.has_edge(a, b)) continue;
      int ca = s.component_of(a), cb = s.component_of(b);
      auto va = s.component_vertices(ca);
      if (ca != cb) {
        auto vb = s.component_vertices(cb);
        if (va.size() + vb.size() < 5) continue;
        va.insert(va.end(), vb.begin(), vb.end());
      } else if (va.size() < 5) {
        continue;
      }
      std::vector<int> shared;
      std::set_intersection(regions[a].begin(), regions[a].end(), regions[b].begin(), regions[b].end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      std::sort(va.begin(), va.end());
      Graph g = whole;
      g.add_edge(a, b);
      if (!is_partial_3tree(g.induced(va)) && ++count >= cap) return count;
    }
  return count;
}

}  // namespace p3t

class SpoilerP3T : public EdgeStrategy {
public:
  std::string name() const override { return "spoiler-p3t"; }

  DrawMove next(const PlaneState& s, const History& h) override {
    int bi = last_move_by(h, Player::builder);
    std::optional<Edge> built;
    if (bi >= 0) built = Edge{h[bi].move.u, h[bi].move.v};

    using Key = std::array<int, 6>;
    std::vector<std::pair<Key, DrawMove>> cands;
    for (const auto& slot : s.legal_edge_slots()) {
      for (const auto& m : routings(s, slot)) {
        PlaneState t = s;
        t.place(m, Player::spoiler);
        auto sc = p3t::score(t).key();
        cands.push_back({Key{sc[0], sc[1], sc[2], sc[3], sc[4], built ? !closes(t, *built) : 0}, m});
      }
    }
    if (cands.empty()) fail(errc::game_over, "no legal move");
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    // Then look one Builder move ahead, in that order: the first reply that
    // leaves Builder no breaking edge wins.
    std::size_t pick = 0;
    std::pair<int, int> best{std::numeric_limits<int>::max(), 0};
    for (std::size_t i = 0; i < cands.size() && i < kLookahead; ++i) {
      if (cands[i].first[0] > 0) break;
      PlaneState t = s;
      t.place(cands[i].second, Player::spoiler);
      std::pair<int, int> key{p3t::threats(t), static_cast<int>(i)};
      if (key < best) {
        best = key;
        pick = i;
      }
      if (key.first == 0) break;
    }
    if (cands[pick].first[0] > 0) {
      // Every reply leaves a component outside the class: nothing in the
      // case analysis leads here.
      if (strict) fail(errc::strategy_confused, name() + ": no reply keeps every component a partial 3-tree");
      ++fallbacks;
      events.push_back("no reply keeps every component a partial 3-tree");
    }
    return cands[pick].second;
  }

  static constexpr std::size_t kLookahead = 40;

private:
  // The last edge drawn and Builder's edge `e` bound a common triangle face.
  static bool closes(const PlaneState& t, Edge e) {
    int last = t.move_count() - 1;
    int a = t.tail(2 * last), b = t.head(2 * last);
    std::array<int, 4> ends{a, b, e.first, e.second};
    std::sort(ends.begin(), ends.end());
    auto it = std::adjacent_find(ends.begin(), ends.end());
    if (it == ends.end()) return false;
    int shared = *it;
    int x = a == shared ? b : a;
    int y = e.first == shared ? e.second : e.first;
    return t.has_edge(x, y) && triangle_face(t, shared, x, y, false) >= 0;
  }
};

}  // namespace parena
