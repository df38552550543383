#pragma once

// Combinatorial positions of the edge drawing game.
//
// A position is a rotation system (ccw order of darts around each vertex)
// plus, for every connected component, the dart that marks its outer face
// and the face of another component it sits in (its container). Only the
// isotopy class of a drawing matters, so this is all the state there is.
//
// Darts: edge e owns darts 2e (drawn u->v) and 2e+1 (v->u). The face to the
// left of dart d continues with next(d) = the dart preceding twin(d) in the
// ccw rotation at head(d).

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planar_arena/error.hpp"
#include "planar_arena/graph.hpp"
#include "planar_arena/schedule.hpp"

namespace parena {

inline constexpr int kGlobalRegion = -1;

/// One edge insertion. `region` is an inner face id or kGlobalRegion;
/// corners are occurrence indices of the endpoint among the corners of the
/// region (see PlaneState::region_corners). When u and v already share a
/// component the face splits: every other component resident in the region
/// must be listed in exactly one of `left` (face left of u->v) or `right`.
/// If the split component is itself a resident of the region, `outer_side`
/// (0 = left, 1 = right) says which successor face remains its outer face.
struct DrawMove {
  int u = 0;
  int v = 0;
  int region = kGlobalRegion;
  int corner_u = 0;
  int corner_v = 0;
  std::vector<int> left;
  std::vector<int> right;
  int outer_side = -1;

  bool operator==(const DrawMove&) const = default;
};

/// A candidate edge with its routing, before residents are assigned.
struct Slot {
  int u = 0;
  int v = 0;
  int region = kGlobalRegion;
  int corner_u = 0;
  int corner_v = 0;
  bool operator==(const Slot&) const = default;
};

/// An angular wedge at a vertex facing some region; `dart` is the outgoing
/// dart the wedge follows ccw, or -1 for an isolated vertex.
struct Corner {
  int vertex = 0;
  int dart = -1;
};

struct Faces {
  std::vector<int> face_of;               // dart -> face id
  std::vector<std::vector<int>> walks;    // face -> darts, starting at its smallest dart
  std::vector<int> rep;                   // face -> component representative
  std::vector<char> outer;                // face is its component's outer face
};

struct ComponentInfo {
  int outer_dart = -1;  // -1 for an isolated vertex
  int container = -1;   // a dart on the containing face, -1 for the global region
};

class PlaneState {
public:
  PlaneState() = default;
  PlaneState(int n, const BiasSchedule& schedule)
      : n_(n), rot_(static_cast<std::size_t>(n)), comp_of_(static_cast<std::size_t>(n)),
        comp_(static_cast<std::size_t>(n)), adj_(static_cast<std::size_t>(n)), turn_(schedule) {
    if (n < 3) fail(errc::invalid_parameter, "need at least 3 vertices");
    for (int v = 0; v < n; ++v) comp_of_[v] = v;
  }

  int n() const { return n_; }
  int move_count() const { return static_cast<int>(owner_.size()); }
  int edge_count() const { return move_count(); }
  int total_moves() const { return 3 * n_ - 6; }
  bool is_complete() const { return move_count() == total_moves(); }

  const TurnTracker& turn() const { return turn_; }
  TurnTracker& turn() { return turn_; }

  int tail(int dart) const { return tail_[dart]; }
  int head(int dart) const { return tail_[dart ^ 1]; }
  int next_in_face(int dart) const {
    int h = head(dart);
    const auto& r = rot_[h];
    int p = pos_[dart ^ 1];
    return r[(p + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size())];
  }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  Player edge_owner(int edge) const { return owner_[edge]; }
  Edge edge(int e) const { return {tail_[2 * e], tail_[2 * e + 1]}; }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[u].count(v) > 0;
  }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool is_isolated(int v) const { return rot_[v].empty(); }

  int component_of(int v) const { return comp_of_[v]; }
  const ComponentInfo& component(int rep) const { return comp_[rep]; }
  std::vector<int> components() const {
    std::vector<int> reps;
    for (int v = 0; v < n_; ++v)
      if (comp_of_[v] == v) reps.push_back(v);
    return reps;
  }
  std::vector<int> component_vertices(int rep) const {
    std::vector<int> vs;
    for (int v = 0; v < n_; ++v)
      if (comp_of_[v] == rep) vs.push_back(v);
    return vs;
  }

  const Faces& faces() const {
    if (!faces_) faces_ = std::make_shared<const Faces>(trace());
    return *faces_;
  }

  /// Face id the component sits in, or kGlobalRegion.
  int container_face(int rep) const {
    int d = comp_[rep].container;
    return d < 0 ? kGlobalRegion : faces().face_of[d];
  }
  int outer_face(int rep) const {
    int d = comp_[rep].outer_dart;
    return d < 0 ? -1 : faces().face_of[d];
  }

  bool is_region(int region) const {
    if (region == kGlobalRegion) return true;
    const auto& f = faces();
    return region >= 0 && region < static_cast<int>(f.walks.size()) && !f.outer[region];
  }

  /// kGlobalRegion followed by every inner face id.
  std::vector<int> regions() const {
    std::vector<int> out{kGlobalRegion};
    const auto& f = faces();
    for (int i = 0; i < static_cast<int>(f.walks.size()); ++i)
      if (!f.outer[i]) out.push_back(i);
    return out;
  }

  /// Components sitting directly in `region`, by representative.
  std::vector<int> residents(int region) const {
    std::vector<int> out;
    for (int rep : components())
      if (container_face(rep) == region) out.push_back(rep);
    return out;
  }

  /// Component whose inner face is `region` (-1 for the global region).
  int container_of_region(int region) const {
    return region == kGlobalRegion ? -1 : faces().rep[region];
  }

  /// Corners facing `region` in canonical order: the container's face walk
  /// from its smallest dart, then each resident's outer walk in
  /// representative order.
  std::vector<Corner> region_corners(int region) const {
    if (!is_region(region)) fail(errc::illegal_move, "no such region " + std::to_string(region));
    std::vector<Corner> out;
    const auto& f = faces();
    if (region != kGlobalRegion)
      for (int d : f.walks[region]) out.push_back({tail_[d], d});
    for (int rep : residents(region)) {
      if (comp_[rep].outer_dart < 0) {
        out.push_back({rep, -1});
        continue;
      }
      for (int d : f.walks[f.face_of[comp_[rep].outer_dart]]) out.push_back({tail_[d], d});
    }
    return out;
  }

  std::vector<Corner> corners_of(int region, int v) const {
    std::vector<Corner> out;
    for (const auto& c : region_corners(region))
      if (c.vertex == v) out.push_back(c);
    return out;
  }

  /// Every distinct legal edge with routing; empty iff the game is over.
  std::vector<Slot> legal_edge_slots() const {
    std::vector<Slot> out;
    if (is_complete()) return out;
    for (int region : regions()) {
      auto corners = region_corners(region);
      std::vector<int> occurrence(corners.size());
      std::vector<int> seen(static_cast<std::size_t>(n_), 0);
      for (std::size_t i = 0; i < corners.size(); ++i) occurrence[i] = seen[corners[i].vertex]++;
      for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
          int a = corners[i].vertex, b = corners[j].vertex;
          if (a == b || has_edge(a, b)) continue;
          out.push_back({a, b, region, occurrence[i], occurrence[j]});
        }
    }
    return out;
  }

  /// Whether drawing `slot` splits a face (true) or merges two components.
  bool is_split(const Slot& s) const { return comp_of_[s.u] == comp_of_[s.v]; }

  /// Residents that a split along `slot` must distribute.
  std::vector<int> split_residents(const Slot& s) const {
    std::vector<int> out;
    if (!is_split(s)) return out;
    for (int rep : residents(s.region))
      if (rep != comp_of_[s.u]) out.push_back(rep);
    return out;
  }

  /// True when the split component is a resident (outer_side must be set).
  bool split_needs_outer_side(const Slot& s) const {
    return is_split(s) && container_of_region(s.region) != comp_of_[s.u];
  }

  void apply_move(const DrawMove& m, Player p) {
    if (is_complete()) fail(errc::game_over, "no moves remain");
    if (p != turn_.to_move) fail(errc::wrong_turn, std::string("it is ") + to_string(turn_.to_move) + "'s turn");
    place(m, p);
    turn_.advance();
  }

  /// Applies a move without consulting the turn schedule.
  void place(const DrawMove& m, Player p) {
    if (is_complete()) fail(errc::game_over, "no moves remain");
    if (m.u < 0 || m.v < 0 || m.u >= n_ || m.v >= n_) fail(errc::illegal_move, "vertex out of range");
    if (m.u == m.v) fail(errc::illegal_move, "loop");
    if (has_edge(m.u, m.v)) fail(errc::duplicate_edge, "edge already drawn");
    if (!is_region(m.region)) fail(errc::illegal_move, "no such region");
    auto cu = corners_of(m.region, m.u);
    auto cv = corners_of(m.region, m.v);
    if (m.corner_u < 0 || m.corner_u >= static_cast<int>(cu.size()))
      fail(errc::illegal_move, "vertex " + std::to_string(m.u) + " has no such corner in the region");
    if (m.corner_v < 0 || m.corner_v >= static_cast<int>(cv.size()))
      fail(errc::illegal_move, "vertex " + std::to_string(m.v) + " has no such corner in the region");
    const int out_u = cu[m.corner_u].dart, out_v = cv[m.corner_v].dart;
    const int ru = comp_of_[m.u], rv = comp_of_[m.v];
    const int container = container_of_region(m.region);

    if (ru != rv) {
      if (!m.left.empty() || !m.right.empty() || m.outer_side != -1)
        fail(errc::malformed_partition, "joining two components splits no face");
      auto [a, b] = insert_edge(m.u, out_u, m.v, out_v, p);
      (void)b;
      ComponentInfo merged;
      if (container == ru) merged = comp_[ru];
      else if (container == rv) merged = comp_[rv];
      else merged = {a, comp_[ru].container};
      int keep = std::min(ru, rv), drop = std::max(ru, rv);
      for (auto& c : comp_of_)
        if (c == drop) c = keep;
      comp_[keep] = merged;
      comp_[drop] = {};
      return;
    }

    // Same component: the face splits. Validate the partition first.
    std::vector<int> others;
    for (int rep : residents(m.region))
      if (rep != ru) others.push_back(rep);
    auto normalize = [&](const std::vector<int>& list) {
      std::vector<int> out;
      for (int x : list) {
        if (x < 0 || x >= n_) fail(errc::malformed_partition, "vertex out of range");
        out.push_back(comp_of_[x]);
      }
      return out;
    };
    auto left = normalize(m.left), right = normalize(m.right);
    std::vector<int> all(left);
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      fail(errc::malformed_partition, "a resident is listed twice");
    if (all != others) fail(errc::malformed_partition, "partition must list exactly the residents of the split face");
    const bool resident_split = container != ru;
    if (resident_split && m.outer_side != 0 && m.outer_side != 1)
      fail(errc::malformed_partition, "outer_side must be 0 or 1 when splitting a resident's outer face");
    if (!resident_split && m.outer_side != -1)
      fail(errc::malformed_partition, "outer_side only applies to a resident's outer face");

    auto [a, b] = insert_edge(m.u, out_u, m.v, out_v, p);
    if (!resident_split) {
      for (int r : left) comp_[r].container = a;
      for (int r : right) comp_[r].container = b;
    } else {
      const int inner = m.outer_side == 0 ? b : a;
      comp_[ru].outer_dart = m.outer_side == 0 ? a : b;
      for (int r : (m.outer_side == 0 ? right : left)) comp_[r].container = inner;
    }
  }

  Graph graph() const {
    Graph g(n_);
    for (int e = 0; e < move_count(); ++e) g.add_edge(tail_[2 * e], tail_[2 * e + 1]);
    return g;
  }

  Graph builder_subgraph() const {
    Graph g(n_);
    for (int e = 0; e < move_count(); ++e)
      if (owner_[e] == Player::builder) g.add_edge(tail_[2 * e], tail_[2 * e + 1]);
    return g;
  }

  /// Per-component Euler check V - E + F == 2 and face-length bookkeeping.
  bool euler_holds() const {
    const auto& f = faces();
    for (int rep : components()) {
      int verts = 0, edges = 0, faces_count = 0;
      for (int v = 0; v < n_; ++v)
        if (comp_of_[v] == rep) {
          ++verts;
          edges += degree(v);
        }
      edges /= 2;
      for (std::size_t i = 0; i < f.walks.size(); ++i)
        if (f.rep[i] == rep) ++faces_count;
      if (edges == 0) faces_count = 1;
      if (verts - edges + faces_count != 2) return false;
    }
    return true;
  }

  bool is_triangulation() const {
    if (!is_complete() || components().size() != 1) return false;
    for (const auto& w : faces().walks)
      if (w.size() != 3) return false;
    return true;
  }

  // Raw access for serialization.
  const std::vector<int>& darts_tail() const { return tail_; }
  const std::vector<Player>& owners() const { return owner_; }

private:
  std::pair<int, int> insert_edge(int u, int out_u, int v, int out_v, Player p) {
    const int e = move_count();
    const int a = 2 * e, b = 2 * e + 1;
    tail_.push_back(u);
    tail_.push_back(v);
    pos_.push_back(0);
    pos_.push_back(0);
    owner_.push_back(p);
    insert_after(u, out_u, a);
    insert_after(v, out_v, b);
    adj_[u].insert(v);
    adj_[v].insert(u);
    faces_.reset();
    return {a, b};
  }

  void insert_after(int v, int after, int dart) {
    auto& r = rot_[v];
    int at = after < 0 ? 0 : pos_[after] + 1;
    r.insert(r.begin() + at, dart);
    for (int i = at; i < static_cast<int>(r.size()); ++i) pos_[r[i]] = i;
  }

  Faces trace() const {
    Faces f;
    const int darts = static_cast<int>(tail_.size());
    f.face_of.assign(static_cast<std::size_t>(darts), -1);
    for (int d = 0; d < darts; ++d) {
      if (f.face_of[d] >= 0) continue;
      const int id = static_cast<int>(f.walks.size());
      std::vector<int> walk;
      int x = d;
      do {
        f.face_of[x] = id;
        walk.push_back(x);
        x = next_in_face(x);
      } while (x != d);
      f.walks.push_back(std::move(walk));
      f.rep.push_back(comp_of_[tail_[d]]);
      f.outer.push_back(0);
    }
    for (int rep = 0; rep < n_; ++rep)
      if (comp_of_[rep] == rep && comp_[rep].outer_dart >= 0) f.outer[f.face_of[comp_[rep].outer_dart]] = 1;
    return f;
  }

  int n_ = 0;
  std::vector<int> tail_;
  std::vector<int> pos_;
  std::vector<Player> owner_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> comp_of_;
  std::vector<ComponentInfo> comp_;
  std::vector<std::set<int>> adj_;
  TurnTracker turn_;
  mutable std::shared_ptr<const Faces> faces_;
};

inline PlaneState new_game(int n, const BiasSchedule& schedule) { return PlaneState(n, schedule); }

/// Move for `slot` with every resident sent to one successor face. For a
/// resident split, the other face stays outer.
inline DrawMove make_move(const PlaneState& s, const Slot& slot, int residents_side = 1) {
  DrawMove m{slot.u, slot.v, slot.region, slot.corner_u, slot.corner_v, {}, {}, -1};
  if (!s.is_split(slot)) return m;
  auto res = s.split_residents(slot);
  (residents_side == 0 ? m.left : m.right) = res;
  if (s.split_needs_outer_side(slot)) m.outer_side = residents_side;
  return m;
}

}  // namespace parena
