#pragma once

// Circle packing game state and the strategy interface.

#include <memory>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "planar_arena/layout.hpp"

namespace parena {

class PackingGame {
public:
  explicit PackingGame(BiasSchedule b = BiasSchedule::ratio(1, 1)) : turn_(b) {}

  const Packing& packing() const { return p_; }
  const TurnTracker& turn() const { return turn_; }
  int moves() const { return p_.size(); }
  int moves_by(Player who) const { return who == Player::builder ? builder_moves_ : p_.size() - builder_moves_; }
  const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }

  /// Index of `who`'s most recent circle, or -1.
  int last_by(Player who) const {
    for (int i = p_.size() - 1; i >= 0; --i)
      if (p_.at(i).owner == who) return i;
    return -1;
  }

  /// Validates and places; returns the new index.
  int apply(const Circle& c, Player who) {
    if (who != turn_.to_move) fail(errc::wrong_turn, std::string("it is ") + to_string(turn_.to_move) + "'s turn");
    if (!(c.r > 0) || !std::isfinite(c.r) || !std::isfinite(c.c.x) || !std::isfinite(c.c.y))
      fail(errc::illegal_move, "circle needs a finite centre and positive radius");
    if (auto v = p_.blocker(c))
      fail(errc::illegal_move, "overlaps circle " + std::to_string(v->j) + " by " + std::to_string(v->depth));
    int i = p_.add(c, who, p_.size());
    adj_.emplace_back();
    for (int j : tangent_to(p_, i)) {
      adj_[i].push_back(j);
      adj_[j].push_back(i);
    }
    if (who == Player::builder) ++builder_moves_;
    turn_.advance();
    return i;
  }

  /// Contact-graph ball of radius `hops` around circle v.
  std::vector<int> ball(int v, int hops) const {
    std::vector<int> out{v};
    std::vector<int> depth(static_cast<std::size_t>(p_.size()), -1);
    depth[v] = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
      int u = out[k];
      if (depth[u] == hops) continue;
      for (int w : adj_[u])
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Contact graph induced on `keep`, from the incremental adjacency.
  Graph induced(const std::vector<int>& keep) const {
    std::unordered_map<int, int> index;
    for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k)
      for (int j : adj_[keep[k]])
        if (auto it = index.find(j); it != index.end() && it->second > static_cast<int>(k))
          h.add_edge(static_cast<int>(k), it->second);
    return h;
  }

private:
  Packing p_;
  TurnTracker turn_;
  std::vector<std::vector<int>> adj_;
  int builder_moves_ = 0;
};

class PackingStrategy {
public:
  virtual ~PackingStrategy() = default;
  virtual std::string name() const = 0;
  virtual Circle next(const PackingGame& g) = 0;
  /// Builder strategies with a goal of their own report it here.
  virtual bool finished(const PackingGame&) const { return false; }
  /// Named constants worth recording in a transcript header.
  virtual std::vector<std::pair<std::string, double>> constants() const { return {}; }

  int fallbacks = 0;
  bool strict = false;
  std::vector<std::string> events;

protected:
  void confused(const std::string& why) {
    if (strict) fail(errc::strategy_confused, name() + ": " + why);
    ++fallbacks;
    events.push_back(why);
  }
};

/// Unit circle well clear of everything: to the right of the bounding box by
/// ten diameters of the largest circle (a fixed multiple of the whole
/// packing's diameter would grow geometrically over repeated use).
inline Circle detached_circle(const Packing& p) {
  if (p.empty()) return {{0, 0}, 1};
  double x1 = -kInf, rmax = 1;
  for (const auto& it : p.items()) {
    x1 = std::max(x1, it.circle.c.x + it.circle.r);
    rmax = std::max(rmax, it.circle.r);
  }
  auto [centre, half] = p.bounds();
  return {{x1 + 20 * rmax + 1, centre.y}, 1};
}

/// Uniformly random legal circles; half of them are aimed at Builder's last
/// circle at its scale.
class RandomCircle : public PackingStrategy {
public:
  explicit RandomCircle(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random-circle"; }

  Circle next(const PackingGame& g) override {
    const Packing& p = g.packing();
    if (p.empty()) return {{0, 0}, 1};
    std::uniform_real_distribution<double> U(0, 1);
    int mine = g.last_by(g.turn().to_move);
    int target = g.last_by(other(g.turn().to_move));
    auto [centre, half] = p.bounds();
    for (int attempt = 0; attempt < 200; ++attempt) {
      Point q;
      double scale;
      if (target >= 0 && U(rng_) < 0.5) {
        const Circle& t = p[target];
        q = t.c + polar(U(rng_) * kTwoPi) * (t.r * (1 + 2 * U(rng_)));
        scale = t.r;
      } else {
        q = centre + Point{(2 * U(rng_) - 1) * (half + 2), (2 * U(rng_) - 1) * (half + 2)};
        scale = mine >= 0 ? p[mine].r : 1.0;
      }
      double room = p.clearance(q);
      double r = std::min(room, scale * (0.05 + 0.95 * U(rng_)));
      if (r > 1e-9 * scale && p.fits({q, r})) return {q, r};
    }
    return detached_circle(p);
  }

private:
  std::mt19937_64 rng_;
};

/// Blocks next to Builder's last circle: among tangent placements around it,
/// the one touching the most circles (then the largest), capped at its size.
class GreedyCircleBlocker : public PackingStrategy {
public:
  explicit GreedyCircleBlocker(std::uint64_t seed, int samples = 96) : rng_(seed), samples_(samples) {}
  std::string name() const override { return "greedy-circle-blocker"; }

  Circle next(const PackingGame& g) override {
    const Packing& p = g.packing();
    int target = g.last_by(other(g.turn().to_move));
    if (target < 0) return p.empty() ? Circle{{0, 0}, 1} : detached_circle(p);
    const Circle t = p[target];
    std::uniform_real_distribution<double> U(0, 1);
    double phase = U(rng_) * kTwoPi / samples_;
    std::optional<Circle> best;
    std::pair<int, double> best_key{-1, 0};
    for (int i = 0; i < samples_; ++i) {
      double th = phase + kTwoPi * i / samples_;
      double R = max_radius_at(p, target, th, t.r);
      if (!(R > 1e-9 * t.r)) continue;
      Circle c{t.c + polar(th) * (t.r + R), R};
      if (!p.fits(c)) continue;
      int touches = 0;
      for (int j : p.near(c, p.tau * c.r)) touches += tangent(c, p[j], p.tau);
      std::pair<int, double> key{touches, R};
      if (key > best_key) {
        best_key = key;
        best = c;
      }
    }
    return best ? *best : detached_circle(p);
  }

private:
  std::mt19937_64 rng_;
  int samples_;
};

/// Spoiler's blocker: a detached circle when Builder's last circle is
/// already surrounded, otherwise gamma_blocker with d = max degree + 1.
class SpoilerGamma : public PackingStrategy {
public:
  explicit SpoilerGamma(int max_degree = 3) : d_(max_degree + 1) {}
  std::string name() const override { return "spoiler-gamma"; }
  std::vector<std::pair<std::string, double>> constants() const override { return {{"d", d_}}; }

  Circle next(const PackingGame& g) override {
    const Packing& p = g.packing();
    int last = g.last_by(Player::builder);
    if (last < 0 || is_inner(p, last)) return detached_circle(p);
    Circle c = gamma_blocker(p, last, d_);
    if (!p.fits(c)) {
      confused("blocker circle does not fit");
      return detached_circle(p);
    }
    return c;
  }

private:
  int d_;
};

/// Replays a packing of `h`, one circle per move; a copy that Spoiler spoils
/// is abandoned for a fresh copy further along.
class ScriptedLayout : public PackingStrategy {
public:
  ScriptedLayout(const Graph& h, std::string label) : label_(std::move(label)) {
    auto laid = layout_packing(h);
    for (const auto& it : laid.items()) script_.push_back(it.circle);
    auto e = enclosing(script_);
    stride_ = 4 * e.r + 4;
  }
  std::string name() const override { return label_; }

  Circle next(const PackingGame& g) override {
    const Packing& p = g.packing();
    for (int tries = 0; tries < 1000; ++tries) {
      if (step_ == script_.size()) {
        ++copy_;
        step_ = 0;
      }
      Circle c = script_[step_];
      c.c.y += copy_ * stride_;
      if (p.fits(c)) {
        ++step_;
        return c;
      }
      ++copy_;
      step_ = 0;
    }
    return detached_circle(p);
  }

private:
  static Circle enclosing(const std::vector<Circle>& cs) {
    Packing p;
    for (const auto& c : cs) p.add(c);
    auto [c, half] = p.bounds();
    return {c, half};
  }

  std::string label_;
  std::vector<Circle> script_;
  double stride_ = 10;
  std::size_t step_ = 0;
  int copy_ = 0;
};

}  // namespace parena
