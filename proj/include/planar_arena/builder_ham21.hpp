#pragma once

// Builder's 2:1 Hamiltonicity strategy. Every component whose outer face is
// a 3-cycle is kept eventually strongly Hamiltonian: each reply closes the
// configuration Spoiler just created into a 3-cycle-bounded component whose
// new faces hold no other vertices.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "planar_arena/edge_strategy.hpp"

namespace parena {

namespace ham21 {

enum class Kind { isolated, k12, triangle, k2, other };

struct Piece {
  Kind kind = Kind::other;
  std::array<int, 3> tri{};  // facing 3-cycle, or {centre, leaf, leaf} for k12 and k2
};

/// How the component of v looks from region R.
inline Piece classify(const PlaneState& s, int v, int region) {
  int rep = s.component_of(v);
  if (s.is_isolated(v)) return {Kind::isolated, {v, v, v}};
  auto verts = s.component_vertices(rep);
  if (verts.size() == 2) return {Kind::k2, {verts[0], verts[0], verts[1]}};
  if (verts.size() == 3 && s.degree(verts[0]) + s.degree(verts[1]) + s.degree(verts[2]) == 4) {
    Piece p{Kind::k12, {}};
    int i = 1;
    for (int x : verts) (s.degree(x) == 2 ? p.tri[0] : p.tri[i++]) = x;
    return p;
  }
  std::vector<int> walk;
  if (region != kGlobalRegion && s.container_of_region(region) == rep) {
    for (int d : s.faces().walks[region]) walk.push_back(s.tail(d));
  } else {
    walk = outer_walk(s, rep);
  }
  if (walk.size() == 3) return {Kind::triangle, {walk[0], walk[1], walk[2]}};
  return {};
}

inline std::vector<int> others(const std::array<int, 3>& t, int x) {
  std::vector<int> out;
  for (int y : t)
    if (y != x) out.push_back(y);
  return out;
}

/// Rejects plans leaving a non-triangular new face with vertices inside, or
/// (when `outer3`) a merged component whose outer face is not a 3-cycle;
/// otherwise scores by how many components the new faces hold.
inline PlanScore reply_score(bool outer3) {
  return [outer3](const PlaneState& t) -> std::optional<long> {
    int rep = t.component_of(t.tail(2 * (t.move_count() - 1)));
    if (outer3 && outer_walk(t, rep).size() != 3) return std::nullopt;
    long score = 0;
    const auto& f = t.faces();
    for (int face : new_faces(t, 2)) {
      if (f.outer[face]) continue;
      auto res = t.residents(face);
      if (res.empty()) continue;
      if (f.walks[face].size() != 3) return std::nullopt;
      score += static_cast<long>(res.size());
    }
    return score;
  };
}

using Candidates = std::vector<std::pair<Edge, Edge>>;

inline void both_orders(Candidates& c, Edge a, Edge b) {
  c.push_back({a, b});
  c.push_back({b, a});
}

/// Case-list responses to Spoiler's edge `m`, played in `before`.
inline Candidates response(const PlaneState& before, const DrawMove& m) {
  Candidates c;
  if (before.component_of(m.u) == before.component_of(m.v)) return c;
  Piece a = classify(before, m.u, m.region), b = classify(before, m.v, m.region);
  int ea = m.u, eb = m.v;
  auto rank = [](Kind k) { return static_cast<int>(k); };
  if (rank(a.kind) > rank(b.kind)) {
    std::swap(a, b);
    std::swap(ea, eb);
  }
  if (a.kind == Kind::isolated && b.kind == Kind::isolated) {
    for (int x : isolated_in(before, m.region))
      if (x != ea && x != eb) {
        both_orders(c, {ea, x}, {eb, x});
        break;
      }
  } else if (a.kind == Kind::isolated && b.kind == Kind::triangle) {
    auto uv = others(b.tri, eb);
    if (uv.size() == 2) both_orders(c, {ea, uv[0]}, {ea, uv[1]});
  } else if (a.kind == Kind::isolated && b.kind == Kind::k12) {
    const int x = ea, centre = b.tri[0], l1 = b.tri[1], l2 = b.tri[2];
    if (eb == centre) {
      both_orders(c, {l1, l2}, {x, l1});
      both_orders(c, {l1, l2}, {x, l2});
    } else {
      int other_leaf = eb == l1 ? l2 : l1;
      both_orders(c, {x, other_leaf}, {eb, other_leaf});
    }
    std::vector<Edge> missing;
    for (auto [p, q] : std::vector<Edge>{{x, centre}, {x, l1}, {x, l2}, {l1, l2}})
      if (!before.has_edge(p, q) && !(std::min(p, q) == std::min(m.u, m.v) && std::max(p, q) == std::max(m.u, m.v)))
        missing.push_back({p, q});
    for (std::size_t i = 0; i < missing.size(); ++i)
      for (std::size_t j = i + 1; j < missing.size(); ++j) both_orders(c, missing[i], missing[j]);
  } else if (a.kind == Kind::k12 && b.kind == Kind::triangle) {
    const int l1 = a.tri[1], l2 = a.tri[2];
    for (int t : b.tri)
      for (int k : a.tri)
        if (!(t == eb && k == ea)) both_orders(c, {l1, l2}, {t, k});
  } else if (a.kind == Kind::triangle && b.kind == Kind::triangle) {
    auto ys = others(b.tri, eb), xs = others(a.tri, ea);
    for (int x : xs) both_orders(c, {x, ys[0]}, {x, ys[1]});
    for (int y : ys) both_orders(c, {y, xs[0]}, {y, xs[1]});
  }
  return c;
}

}  // namespace ham21

class BuilderHam21 : public EdgeStrategy {
public:
  std::string name() const override { return "builder-ham21"; }

  DrawMove next(const PlaneState& s, const History& h) override {
    std::size_t since = 0;
    while (since < h.size() && h[h.size() - 1 - since].player == Player::builder) ++since;
    const std::size_t base = h.size() - since;
    PlaneState start = since ? replay(s, h, base) : s;
    auto plan = plan_turn(start, h, base);
    if (plan && since < plan->size()) return (*plan)[since];
    if (s.components().size() == 1) {
      // Connected: any completion is Hamiltonian, play anything.
      return make_move(s, s.legal_edge_slots().front());
    }
    return fallback(s, "no listed configuration matches");
  }

private:
  std::optional<std::vector<DrawMove>> plan_turn(const PlaneState& s, const History& h, std::size_t base) {
    using namespace ham21;
    if (s.move_count() == 0) {
      // First move of the game: a K_{1,2} centred at vertex 0.
      return std::vector<DrawMove>{{0, 1, kGlobalRegion, 0, 0, {}, {}, -1}, {0, 2, kGlobalRegion, 0, 0, {}, {}, -1}};
    }
    if (base > 0 && h[base - 1].player == Player::spoiler) {
      PlaneState before = replay(s, h, base - 1);
      auto cands = response(before, h[base - 1].move);
      if (!cands.empty())
        if (auto p = plan_pair(s, cands, reply_score(true))) return p;
    }
    return default_plan(s);
  }

  static std::optional<std::vector<DrawMove>> default_plan(const PlaneState& s) {
    using namespace ham21;
    if (s.components().size() == 1) return std::nullopt;

    // Faces of components facing each region, by region.
    auto facing = [&](int region) {
      std::vector<Piece> out;
      int owner = s.container_of_region(region);
      if (owner >= 0) {
        auto p = classify(s, owner, region);
        if (p.kind == Kind::triangle) out.push_back(p);
      }
      for (int r : s.residents(region)) {
        auto p = classify(s, r, region);
        if (p.kind != Kind::isolated && p.kind != Kind::other) out.push_back(p);
      }
      return out;
    };

    for (int x = 0; x < s.n(); ++x) {
      if (!s.is_isolated(x)) continue;
      Candidates c;
      for (const auto& p : facing(s.container_face(x))) {
        if (p.kind != Kind::triangle) continue;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (i != j) c.push_back({{p.tri[i], x}, {x, p.tri[j]}});
      }
      if (auto plan = plan_pair(s, c, reply_score(true))) return plan;
    }

    for (bool strict_shape : {true, false}) {
      for (int region : s.regions()) {
        auto pieces = facing(region);
        Candidates tri_pairs, k12_pairs;
        for (std::size_t i = 0; i < pieces.size(); ++i)
          for (std::size_t j = 0; j < pieces.size(); ++j) {
            if (i == j) continue;
            const auto &p = pieces[i], &q = pieces[j];
            if (s.component_of(p.tri[0]) == s.component_of(q.tri[0])) continue;
            if (p.kind == Kind::triangle && q.kind == Kind::triangle) {
              for (int w : p.tri)
                for (int a = 0; a < 3; ++a)
                  for (int b = a + 1; b < 3; ++b) tri_pairs.push_back({{w, q.tri[a]}, {w, q.tri[b]}});
            } else if (p.kind == Kind::triangle && (q.kind == Kind::k12 || q.kind == Kind::k2)) {
              // A lone edge only appears once no isolated vertex is left.
              for (int a : p.tri)
                for (int b : p.tri)
                  if (a != b) k12_pairs.push_back({{a, q.tri[1]}, {b, q.tri[2]}});
            }
          }
        if (auto plan = plan_pair(s, tri_pairs, reply_score(strict_shape))) return plan;
        if (auto plan = plan_pair(s, k12_pairs, reply_score(strict_shape))) return plan;
      }
    }
    return std::nullopt;
  }
};

}  // namespace parena
