#pragma once

// "Eventually P": every plane triangulation extending a drawn component
// satisfies P. Completions are enumerated by triangulating each inner face
// walk with chords (no duplicate edges, no loops), respecting the embedding.
// Desk-scale test oracle only.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "planar_arena/graph_props.hpp"
#include "planar_arena/plane.hpp"

namespace parena {

inline constexpr int kCompletionBudget = 10;

/// Predicate over a completion; `vertices[i]` is the state id of vertex i.
using GraphPredicate = std::function<bool(const Graph&, const std::vector<int>&)>;

struct EventuallyOptions {
  // Also let the isolated / nested residents of the component's inner faces
  // take part, so the completion covers the whole nested subtree.
  bool include_residents = false;
  long node_budget = 2'000'000;
};

namespace detail {

class FaceCompleter {
public:
  FaceCompleter(const Graph& base, std::vector<std::vector<int>> polygons, const GraphPredicate& pred,
                const std::vector<int>& vertices)
      : g_(base), pending_(std::move(polygons)), pred_(pred), vertices_(vertices) {}

  bool all() { return run(); }

private:
  bool run() {
    if (pending_.empty()) {
      auto key = g_.edges();
      if (!seen_.insert(key).second) return true;
      return pred_(g_, vertices_);
    }
    auto poly = pending_.back();
    pending_.pop_back();
    bool ok = true;
    const int k = static_cast<int>(poly.size());
    if (k == 3) {
      ok = run();
    } else {
      // The side (p0, p1) lies in exactly one triangle; enumerate its apex.
      const int a = poly[0], b = poly[1];
      for (int i = 2; i < k && ok; ++i) {
        const int c = poly[i];
        if (c == a || c == b) continue;
        bool need_bc = i != 2, need_ca = i != k - 1;
        if (need_bc && g_.has_edge(b, c)) continue;
        if (need_ca && g_.has_edge(c, a)) continue;
        Graph saved = g_;
        if (need_bc) g_.add_edge(b, c);
        if (need_ca) g_.add_edge(c, a);
        auto saved_pending = pending_;
        if (need_bc) pending_.emplace_back(poly.begin() + 1, poly.begin() + i + 1);
        if (need_ca) {
          std::vector<int> rest(poly.begin() + i, poly.end());
          rest.push_back(a);
          pending_.push_back(std::move(rest));
        }
        ok = run();
        pending_ = std::move(saved_pending);
        g_ = std::move(saved);
      }
    }
    pending_.push_back(std::move(poly));
    return ok;
  }

  Graph g_;
  std::vector<std::vector<int>> pending_;
  const GraphPredicate& pred_;
  const std::vector<int>& vertices_;
  std::set<std::vector<Edge>> seen_;
};

inline bool in_subtree(const PlaneState& s, int rep, int root) {
  for (int x = rep; x >= 0;) {
    if (x == root) return true;
    int f = s.container_face(x);
    if (f == kGlobalRegion) return false;
    x = s.faces().rep[f];
  }
  return false;
}

inline Graph induced_on(const PlaneState& s, const std::vector<int>& vertices) {
  return s.graph().induced(vertices);
}

class ResidentCompleter {
public:
  ResidentCompleter(int root, const GraphPredicate& pred, long budget) : root_(root), pred_(pred), budget_(budget) {}

  bool all(const PlaneState& s) {
    if (--budget_ < 0) fail(errc::budget_exceeded, "completion enumeration budget exhausted");
    std::vector<DrawMove> moves;
    for (int region : s.regions()) {
      int owner = s.container_of_region(region);
      if (owner < 0 || !in_subtree(s, owner, root_)) continue;
      auto corners = s.region_corners(region);
      std::vector<int> occ(corners.size());
      std::vector<int> count(static_cast<std::size_t>(s.n()), 0);
      for (std::size_t i = 0; i < corners.size(); ++i) occ[i] = count[corners[i].vertex]++;
      for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
          int u = corners[i].vertex, v = corners[j].vertex;
          if (u == v || s.has_edge(u, v)) continue;
          Slot slot{u, v, region, occ[i], occ[j]};
          expand(s, slot, moves);
        }
    }
    if (moves.empty()) {
      std::vector<int> verts;
      for (int v = 0; v < s.n(); ++v)
        if (in_subtree(s, s.component_of(v), root_)) verts.push_back(v);
      auto g = induced_on(s, verts);
      if (!seen_.insert(g.edges()).second) return true;
      return pred_(g, verts);
    }
    for (const auto& m : moves) {
      PlaneState next = s;
      next.place(m, Player::builder);
      if (!all(next)) return false;
    }
    return true;
  }

private:
  static void expand(const PlaneState& s, const Slot& slot, std::vector<DrawMove>& out) {
    DrawMove base{slot.u, slot.v, slot.region, slot.corner_u, slot.corner_v, {}, {}, -1};
    if (!s.is_split(slot)) {
      out.push_back(base);
      return;
    }
    auto res = s.split_residents(slot);
    const int sides = s.split_needs_outer_side(slot) ? 2 : 1;
    for (std::uint32_t mask = 0; mask < (1u << res.size()); ++mask)
      for (int side = 0; side < sides; ++side) {
        DrawMove m = base;
        for (std::size_t i = 0; i < res.size(); ++i) ((mask >> i) & 1 ? m.left : m.right).push_back(res[i]);
        if (sides == 2) m.outer_side = side;
        out.push_back(std::move(m));
      }
  }

  int root_;
  const GraphPredicate& pred_;
  long budget_;
  std::set<std::vector<Edge>> seen_;
};

}  // namespace detail

/// True iff every plane triangulation completing the component of `rep`
/// satisfies `pred`. By default only the component's own vertices take part;
/// see EventuallyOptions::include_residents.
inline bool eventually_satisfies(const PlaneState& s, int rep, const GraphPredicate& pred,
                                 EventuallyOptions opts = {}) {
  rep = s.component_of(rep);
  if (opts.include_residents) {
    int count = 0;
    for (int v = 0; v < s.n(); ++v) count += detail::in_subtree(s, s.component_of(v), rep);
    if (count > kCompletionBudget) fail(errc::budget_exceeded, "completion budget is 10 vertices");
    PlaneState copy = s;
    return detail::ResidentCompleter(rep, pred, opts.node_budget).all(copy);
  }
  auto verts = s.component_vertices(rep);
  if (static_cast<int>(verts.size()) > kCompletionBudget)
    fail(errc::budget_exceeded, "completion budget is 10 vertices");
  std::vector<int> index(static_cast<std::size_t>(s.n()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  Graph base = s.graph().induced(verts);
  const auto& f = s.faces();
  std::vector<std::vector<int>> polygons;
  for (std::size_t face = 0; face < f.walks.size(); ++face) {
    if (f.rep[face] != rep || f.outer[face]) continue;
    std::vector<int> poly;
    for (int d : f.walks[face]) poly.push_back(index[s.tail(d)]);
    polygons.push_back(std::move(poly));
  }
  // A lone vertex or edge is not a drawing of a triangulation's interior.
  if (s.outer_face(rep) < 0) return pred(base, verts);
  return detail::FaceCompleter(base, std::move(polygons), pred, verts).all();
}

/// The outer face of `rep`'s component as a triple, if it is a 3-cycle.
inline std::optional<OuterTriple> outer_triple(const PlaneState& s, int rep) {
  int f = s.outer_face(s.component_of(rep));
  if (f < 0) return std::nullopt;
  const auto& walk = s.faces().walks[f];
  if (walk.size() != 3) return std::nullopt;
  return OuterTriple{s.tail(walk[0]), s.tail(walk[1]), s.tail(walk[2])};
}

inline bool eventually_strongly_hamiltonian(const PlaneState& s, int rep, EventuallyOptions opts = {}) {
  auto outer = outer_triple(s, rep);
  if (!outer) fail(errc::precondition, "component's outer face is not a 3-cycle");
  return eventually_satisfies(
      s, rep,
      [&](const Graph& h, const std::vector<int>& verts) {
        auto at = [&](int v) { return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin()); };
        return is_strongly_hamiltonian(h, {at(outer->u1), at(outer->u2), at(outer->u3)});
      },
      opts);
}

}  // namespace parena
