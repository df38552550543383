#pragma once

// Builder's 1:1 strategy for large Apollonian networks. Against Spoiler's
// opening circle Omega1 (radius R), Builder plays Omega2 of the same radius
// at gap eps R. Inside the corridor |x| < x0 R between them sit three
// circles w0, w1, w2 per side, each touching both and its neighbour; no
// legal circle meets one side's circles and the other's, so after Spoiler's
// reply one side is untouched and Builder plays its w1. That threatens both
// circles touching Omega1, Omega2 and w1 at once (a winning position); the
// one Builder gets makes two empty triangles, one of which becomes a K4, and
// from then on Builder fills empty faces of the network.

#include "planar_arena/packing_game.hpp"

namespace parena {

/// The corridor constants: the parabola -delta x^2 bounds the unit circle
/// over (-a, a), and 14 delta x0 < 1/2, 7 eps / x0 < 1/2.
struct CorridorConstants {
  double delta = 1, a = 0.5, x0 = 0, epsilon = 0;
  static CorridorConstants standard() {
    CorridorConstants k;
    k.x0 = std::min(k.a, 1 / (29 * k.delta));
    k.epsilon = k.x0 / 15;
    return k;
  }
  bool hold() const { return 14 * delta * x0 < 0.5 && 7 * epsilon / x0 < 0.5 && x0 < a; }
};

/// Local frame: the gap's midpoint-bottom at the top of Omega1, y towards
/// Omega2, lengths in units of R.
struct CorridorFrame {
  Point origin, ex, ey;
  double R = 1;
  Point at(double x, double y) const { return origin + ex * (x * R) + ey * (y * R); }
  Circle map(double x, double y, double r) const { return {at(x, y), r * R}; }
  static CorridorFrame around(const Circle& omega1, double theta) {
    CorridorFrame f;
    f.ey = polar(theta);
    f.ex = {f.ey.y, -f.ey.x};
    f.R = omega1.r;
    f.origin = omega1.c + f.ey * omega1.r;
    return f;
  }
};

/// w0, w1, w2 on one side (-1 left, +1 right), in frame units.
inline std::array<Circle, 3> corridor_circles(const CorridorConstants& k, int side) {
  const double h = 1 + k.epsilon / 2;
  std::array<Circle, 3> w;
  double r = (k.x0 * k.x0 + h * h - 1) / (2 + 2 * k.x0);
  w[0] = {{-k.x0 + r, k.epsilon / 2}, r};
  for (int i = 1; i < 3; ++i) {
    double s = w[i - 1].c.x + w[i - 1].r;
    double ri = (s * s + h * h - 1) / (2 - 2 * s);
    w[i] = {{s + ri, k.epsilon / 2}, ri};
  }
  if (side > 0)
    for (auto& c : w) c.c.x = -c.c.x;
  return w;
}

struct WinningWitness {
  int omega1 = -1, omega2 = -1, omega = -1;
  CorridorConstants constants;
};

namespace detail {

// The two circles touching all of a, b, w, guessed either side of w along
// the corridor.
inline std::array<std::optional<Circle>, 2> threat_circles(const Circle& a, const Circle& b, const Circle& w) {
  Point axis = b.c - a.c;
  Point along = Point{axis.y, -axis.x} * (1 / axis.norm());
  std::array<std::optional<Circle>, 2> out;
  for (int s = 0; s < 2; ++s) {
    Circle guess{w.c + along * ((s ? 1 : -1) * 2 * w.r), w.r};
    auto c = tangent_circle({a, b, w}, guess);
    if (c && tangency_residual(*c, {a, b, w}) <= 1e-9 * std::max(c->r, w.r) && (c->c - w.c).norm() > w.r) out[s] = c;
  }
  return out;
}

inline bool interstice_empty(const Packing& p, const Interstice& f) {
  for (const auto& it : p.items())
    if (in_interstice(it.circle.c, f)) return false;
  return true;
}

}  // namespace detail

/// Checks the four conditions, the last one through the corridor bound
/// (a sufficient condition for the witnesses this strategy builds).
inline bool is_winning_position(const Packing& p, const WinningWitness& w) {
  if (w.omega1 < 0 || w.omega2 < 0 || w.omega < 0 || w.omega1 >= p.size() || w.omega2 >= p.size() ||
      w.omega >= p.size())
    fail(errc::invalid_parameter, "witness is not in the packing");
  const Circle o1 = p[w.omega1], o2 = p[w.omega2], om = p[w.omega];
  if (!tangent(om, o1, p.tau) || !tangent(om, o2, p.tau)) return false;
  auto threats = detail::threat_circles(o1, o2, om);
  for (const auto& g : threats) {
    if (!g || !p.fits(*g)) return false;
    if (!detail::interstice_empty(p, {o1, om, *g}) || !detail::interstice_empty(p, {o2, om, *g})) return false;
  }
  // Corridor certificate: equal radii, both threats and omega within
  // |x| <= x0 R of the gap, and the two strict inequalities at the measured gap.
  const auto& k = w.constants;
  const double R = o1.r;
  if (std::abs(o2.r - R) > p.tau * R) return false;
  const double eps = dist(o1, o2) / R;
  if (!(eps > 0) || !(14 * k.delta * k.x0 < 0.5) || !(7 * eps / k.x0 < 0.5)) return false;
  Point axis = (o2.c - o1.c) * (1 / (o2.c - o1.c).norm());
  Point mid = o1.c + axis * (R + eps * R / 2);
  Point along{axis.y, -axis.x};
  for (const Circle& c : {om, *threats[0], *threats[1]})
    if (std::abs((c.c - mid).dot(along)) + c.r > k.x0 * R * (1 + 1e-9)) return false;
  return true;
}

class BuilderApollonian : public PackingStrategy {
public:
  explicit BuilderApollonian(int target_n, CorridorConstants k = CorridorConstants::standard())
      : target_(target_n), k_(k) {
    if (target_n < 4) fail(errc::invalid_parameter, "target_n must be at least 4");
  }

  std::string name() const override { return "builder-apollonian"; }
  std::vector<std::pair<std::string, double>> constants() const override {
    return {{"delta", k_.delta}, {"a", k_.a}, {"x0", k_.x0}, {"epsilon", k_.epsilon}};
  }
  bool finished(const PackingGame&) const override { return static_cast<int>(network_.size()) >= target_; }

  const std::vector<int>& network() const { return network_; }
  /// Builder move count (1-based) at which the winning position was reached,
  /// and at which the K4 appeared; -1 until then.
  int winning_move() const { return winning_move_; }
  int k4_move() const { return k4_move_; }
  bool certified() const { return certified_; }
  const WinningWitness& witness() const { return witness_; }

  Circle next(const PackingGame& g) override {
    const Packing& p = g.packing();
    catch_up(g);
    const int move = g.moves_by(Player::builder) + 1;
    switch (stage_) {
      case Stage::open: return open(p);
      case Stage::corridor: return corridor(p, move);
      case Stage::threat: return threat(p);
      case Stage::k4: return k4(p, move);
      case Stage::grow: return grow(p);
    }
    return detached_circle(p);
  }

private:
  enum class Stage { open, corridor, threat, k4, grow };

  // Assigns indices to the circles this strategy asked for.
  void catch_up(const PackingGame& g) {
    const Packing& p = g.packing();
    for (; seen_ < p.size(); ++seen_) {
      if (p.at(seen_).owner != Player::builder || pending_.empty()) continue;
      *pending_.front() = seen_;
      pending_.erase(pending_.begin());
    }
  }

  Circle expect(int* slot, const Circle& c) {
    pending_.push_back(slot);
    return c;
  }

  Circle open(const Packing& p) {
    if (p.empty()) return expect(&witness_.omega1, {{0, -1}, 1});
    if (witness_.omega1 < 0) witness_.omega1 = 0;
    const Circle o1 = p[witness_.omega1];
    for (int t = 0; t < 32; ++t) {
      double theta = std::numbers::pi / 2 + kTwoPi * t / 32;
      CorridorFrame f = CorridorFrame::around(o1, theta);
      Circle o2 = f.map(0, 1 + k_.epsilon, 1);
      if (!p.fits(o2)) continue;
      bool clear = true;
      Circle zone{f.at(0, 0), 3 * k_.x0 * f.R};
      for (int j : p.near(zone))
        if (j != witness_.omega1 && dist(zone, p[j]) < 0) clear = false;
      if (!clear) continue;
      frame_ = f;
      stage_ = Stage::corridor;
      return expect(&witness_.omega2, o2);
    }
    confused("no clear direction for the second circle");
    return detached_circle(p);
  }

  Circle corridor(const Packing& p, int move) {
    for (int side : {-1, 1}) {
      auto w = corridor_circles(k_, side);
      std::array<Circle, 3> world;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        world[i] = frame_.map(w[i].c.x, w[i].c.y, w[i].r);
        ok = ok && p.fits(world[i]);
      }
      if (!ok) continue;
      // Snap w1 onto the actual circles.
      Circle w1 = world[1];
      if (auto c = detail::threat_circles(p[witness_.omega1], p[witness_.omega2], world[0])[1]) w1 = *c;
      Packing after = p;
      witness_.omega = after.add(w1);
      witness_.constants = k_;
      certified_ = is_winning_position(after, witness_);
      witness_.omega = -1;
      winning_move_ = move;
      stage_ = Stage::threat;
      return expect(&witness_.omega, w1);
    }
    confused("both sides of the corridor are blocked");
    return detached_circle(p);
  }

  Circle threat(const Packing& p) {
    const Circle o1 = p[witness_.omega1], o2 = p[witness_.omega2], w = p[witness_.omega];
    for (const auto& g : detail::threat_circles(o1, o2, w)) {
      if (!g || !p.fits(*g)) continue;
      if (!detail::interstice_empty(p, {o1, w, *g}) || !detail::interstice_empty(p, {o2, w, *g})) continue;
      stage_ = Stage::k4;
      return expect(&gamma_, *g);
    }
    confused("both threats are blocked");
    return detached_circle(p);
  }

  Circle k4(const Packing& p, int move) {
    for (int base : {witness_.omega1, witness_.omega2}) {
      Interstice f{p[base], p[witness_.omega], p[gamma_]};
      Circle s = soddy_circles(f[0], f[1], f[2], p.tau).inner;
      if (!p.fits(s) || !detail::interstice_empty(p, f)) continue;
      network_ = {base, witness_.omega, gamma_};
      k4_move_ = move;
      stage_ = Stage::grow;
      grow_slot_ = {base, witness_.omega, gamma_};
      return expect(&new_vertex_, s);
    }
    confused("both triangles are blocked");
    return detached_circle(p);
  }

  Circle grow(const Packing& p) {
    if (new_vertex_ >= 0) {
      // Split the face the last circle went into.
      network_.push_back(new_vertex_);
      auto [a, b, c] = grow_slot_;
      faces_.push_back({a, b, new_vertex_});
      faces_.push_back({b, c, new_vertex_});
      faces_.push_back({a, c, new_vertex_});
      new_vertex_ = -1;
    }
    std::optional<std::pair<double, std::size_t>> best;
    Circle pick{};
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      auto [a, b, c] = faces_[i];
      Interstice f{p[a], p[b], p[c]};
      if (!detail::interstice_empty(p, f)) continue;
      Circle s = soddy_circles(f[0], f[1], f[2], p.tau).inner;
      if (!p.fits(s)) continue;
      if (!best || s.r > best->first) {
        best = {s.r, i};
        pick = s;
      }
    }
    if (!best) {
      confused("every face of the network is occupied");
      return detached_circle(p);
    }
    grow_slot_ = faces_[best->second];
    faces_.erase(faces_.begin() + static_cast<std::ptrdiff_t>(best->second));
    return expect(&new_vertex_, pick);
  }

  int target_;
  CorridorConstants k_;
  Stage stage_ = Stage::open;
  CorridorFrame frame_;
  WinningWitness witness_;
  int gamma_ = -1, new_vertex_ = -1;
  std::tuple<int, int, int> grow_slot_{-1, -1, -1};
  std::vector<std::tuple<int, int, int>> faces_;
  std::vector<int> network_;
  std::vector<int*> pending_;
  int seen_ = 0;
  int winning_move_ = -1, k4_move_ = -1;
  bool certified_ = false;
};

}  // namespace parena
