#pragma once

// Builder's (1+eps):1 strategy for an arbitrary planar H. Phase 1 lays unit
// circles on a triangular lattice, each tangent to a touching pair, until m
// empty interstices exist. Phase 2 plays the box game on those interstices:
// a box's cells are a packing of H shrunk into the interstice's incircle, and
// a Spoiler circle landing in an interstice touches that box.

#include <map>
#include <set>
#include <tuple>

#include "planar_arena/box_game.hpp"
#include "planar_arena/packing_game.hpp"

namespace parena {

class BuilderBox : public PackingStrategy {
public:
  BuilderBox(const Graph& h, double epsilon)
      : h_(h), q_(BiasSchedule::one_plus_epsilon(epsilon).extra_period()), n_(h.size()) {
    if (n_ < 1) fail(errc::invalid_parameter, "H needs a vertex");
    if (!is_planar(h)) fail(errc::non_planar, "H is not planar");
    m_ = static_cast<int>(box_threshold(n_, q_));
    Packing laid = layout_packing(h);
    auto unit = fit_into(laid, {{0, 0}, 1});
    cells_.assign(unit.begin(), unit.end());
  }

  std::string name() const override { return "builder-box"; }
  std::vector<std::pair<std::string, double>> constants() const override {
    return {{"q", q_}, {"m", m_}, {"n", n_}};
  }

  int boxes() const { return m_; }
  int phase_one_moves() const { return phase_one_moves_; }
  int colonies() const { return colonies_; }
  const BoxGameState& box_state() const { return box_; }
  /// Packing indices of the cells in a box completed while live, if any.
  std::optional<std::vector<int>> winning_cells(const PackingGame& g) const {
    if (won_ >= 0) return placed_cells_.at(won_);
    // The completing cell has been placed but not read back yet.
    int last = g.last_by(Player::builder);
    if (completing_ >= 0 && last >= seen_) {
      auto cells = placed_cells_.at(completing_);
      cells.push_back(last);
      return cells;
    }
    return std::nullopt;
  }

  bool finished(const PackingGame& g) const override { return winning_cells(g).has_value(); }

  Circle next(const PackingGame& g) override {
    catch_up(g);
    if (!in_phase_two_) {
      // Phase 2 starts at the top of a schedule cycle, as in the box game.
      const TurnTracker& t = g.turn();
      bool aligned = t.builder_turns % q_ == 0 && t.remaining == t.schedule.owed(Player::builder, t.builder_turns);
      if (live_faces() < m_ || !aligned) {
        if (auto c = next_site(g.packing())) {
          ++phase_one_moves_;
          return *c;
        }
        confused("no lattice site left");
        return detached_circle(g.packing());
      }
      start_phase_two();
    }
    int i = box_maker_move(box_);
    if (i >= 0) {
      const Circle& cell = cells_[static_cast<std::size_t>(box_.maker[i])];
      Circle in = box_circle_[i];
      Circle c{in.c + cell.c * (in.r * kShrink), cell.r * in.r * kShrink};
      if (g.packing().fits(c)) {
        pending_ = i;
        if (box_.maker[i] + 1 >= n_) completing_ = i;
        return c;
      }
      confused("cell of a live box does not fit");
    } else {
      confused("box strategy has no move");
    }
    if (auto c = next_site(g.packing())) return *c;
    return detached_circle(g.packing());
  }

private:
  static constexpr double kShrink = 0.98;
  using Site = std::pair<int, int>;
  using Face = std::tuple<int, int, int>;  // (i, j, up = 0 / down = 1)

  static Point centre(Site s) { return {2.0 * s.first + s.second, std::sqrt(3.0) * s.second}; }
  std::tuple<double, double, int, int> key(int i, int j) const {
    Point c = centre({i, j}) - centre(origin_);
    return {c.dot(c), std::atan2(c.y, c.x), i, j};
  }
  static std::array<Site, 3> corners(Face f) {
    auto [i, j, down] = f;
    if (!down) return {Site{i, j}, Site{i + 1, j}, Site{i, j + 1}};
    return {Site{i + 1, j}, Site{i, j + 1}, Site{i + 1, j + 1}};
  }
  static std::array<Site, 6> around(Site s) {
    auto [i, j] = s;
    return {Site{i + 1, j}, Site{i - 1, j}, Site{i, j + 1}, Site{i, j - 1}, Site{i + 1, j - 1}, Site{i - 1, j + 1}};
  }
  static Face face_at(Point p) {
    double fj = p.y / std::sqrt(3.0), fi = (p.x - fj) / 2;
    int i = static_cast<int>(std::floor(fi)), j = static_cast<int>(std::floor(fj));
    return {i, j, (fi - i) + (fj - j) >= 1 ? 1 : 0};
  }

  // Reads moves made since the last call.
  void catch_up(const PackingGame& g) {
    const Packing& p = g.packing();
    for (; seen_ < p.size(); ++seen_) {
      const PlacedCircle& it = p.at(seen_);
      if (it.owner == Player::builder) {
        if (pending_ >= 0) {
          placed_cells_[pending_].push_back(seen_);
          if (++box_.maker[pending_] >= n_ && !box_.dead(pending_)) won_ = pending_;
          pending_ = -1;
        } else {
          on_site(it.circle);
        }
        continue;
      }
      Face f = face_at(it.circle.c);
      if (poisoned_.insert(f).second && existing_.count(f)) --live_;
      if (auto b = box_of_.find(f); b != box_of_.end()) ++box_.breaker[b->second];
    }
  }

  void on_site(const Circle& c) {
    Site s{static_cast<int>(std::lround((c.c.x - c.c.y / std::sqrt(3.0)) / 2)),
           static_cast<int>(std::lround(c.c.y / std::sqrt(3.0)))};
    placed_.insert(s);
    ++colony_size_;
    frontier_.erase(key(s.first, s.second));
    for (Site t : around(s))
      if (!placed_.count(t)) frontier_.insert(key(t.first, t.second));
    // New faces through s.
    auto [i, j] = s;
    for (Face f : {Face{i, j, 0}, Face{i - 1, j, 0}, Face{i, j - 1, 0}, Face{i - 1, j, 1}, Face{i, j - 1, 1},
                   Face{i - 1, j - 1, 1}}) {
      bool all = true;
      for (Site t : corners(f)) all = all && placed_.count(t);
      if (!all || !existing_.insert(f).second) continue;
      faces_.push_back(f);
      live_ += !poisoned_.count(f);
    }
  }

  int live_faces() const { return live_; }

  // Next lattice site nearest the colony origin that touches a touching pair
  // (the second circle only needs to touch the first). When Spoiler has sealed
  // every such site, a new colony starts to the right of everything.
  std::optional<Circle> next_site(const Packing& p) {
    if (colony_size_ == 0) return seed_colony(p);
    for (auto it = frontier_.begin(); it != frontier_.end();) {
      Site s{std::get<2>(*it), std::get<3>(*it)};
      Circle c{centre(s), 1.0};
      if (!p.fits(c)) {
        it = frontier_.erase(it);  // blocked for good
        continue;
      }
      int near = 0;
      bool pair = false;
      auto nb = around(s);
      for (std::size_t a = 0; a < nb.size(); ++a) {
        if (!placed_.count(nb[a])) continue;
        ++near;
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          int di = nb[a].first - nb[b].first, dj = nb[a].second - nb[b].second;
          bool adjacent = (std::abs(di) + std::abs(dj) == 1) || (di == 1 && dj == -1) || (di == -1 && dj == 1);
          pair = pair || (placed_.count(nb[b]) && adjacent);
        }
      }
      if (colony_size_ == 1 ? near == 1 : pair) return c;
      it = frontier_.erase(it);  // comes back when a neighbour is placed
    }
    return seed_colony(p);
  }

  Circle seed_colony(const Packing& p) {
    Site s{0, 0};
    if (!p.empty()) {
      auto [c, half] = p.bounds();
      s.first = static_cast<int>(std::ceil((c.x + half + 3) / 2));
      s.second = static_cast<int>(std::lround(c.y / std::sqrt(3.0)));
      s.first -= s.second / 2;
      while (!p.fits({centre(s), 1.0})) ++s.first;
    }
    ++colonies_;
    origin_ = s;
    colony_size_ = 0;
    frontier_.clear();
    frontier_.insert(key(s.first, s.second));
    return {centre(s), 1.0};
  }

  void start_phase_two() {
    in_phase_two_ = true;
    box_ = BoxGameState(m_, n_, q_);
    placed_cells_.assign(static_cast<std::size_t>(m_), {});
    int b = 0;
    for (Face f : faces_) {
      if (b == m_) break;
      if (poisoned_.count(f)) continue;
      box_of_[f] = b;
      auto cs = corners(f);
      box_circle_.push_back(incircle({Circle{centre(cs[0]), 1}, Circle{centre(cs[1]), 1}, Circle{centre(cs[2]), 1}}));
      ++b;
    }
  }

  Graph h_;
  int q_, n_, m_ = 0;
  std::vector<Circle> cells_;  // H packed into the unit disk
  std::set<std::tuple<double, double, int, int>> frontier_;
  std::set<Site> placed_;
  Site origin_{0, 0};
  int colony_size_ = 0, colonies_ = 0;
  std::vector<Face> faces_;
  std::set<Face> existing_, poisoned_;
  int live_ = 0;
  bool in_phase_two_ = false;
  int phase_one_moves_ = 0;
  BoxGameState box_;
  std::map<Face, int> box_of_;
  std::vector<Circle> box_circle_;
  std::vector<std::vector<int>> placed_cells_;
  int pending_ = -1, completing_ = -1, won_ = -1;
  int seen_ = 0;
};

}  // namespace parena
