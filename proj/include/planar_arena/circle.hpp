#pragma once

// Circles, packings, validity and contact graphs. A packing keeps an R-tree
// over bounding boxes so legality probes stay logarithmic; the box game can
// put tens of thousands of circles on the board.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "planar_arena/graph.hpp"
#include "planar_arena/schedule.hpp"

namespace parena {

/// Relative tangency tolerance.
inline constexpr double kTau = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0, y = 0;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double k) const { return {x * k, y * k}; }
  double dot(Point o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline Point polar(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct Circle {
  Point c;
  double r = 1;
};

inline Circle make_circle(double x, double y, double r) {
  if (!(r > 0) || !std::isfinite(r) || !std::isfinite(x) || !std::isfinite(y))
    fail(errc::invalid_parameter, "circle needs finite centre and positive radius");
  return {{x, y}, r};
}

/// O1O2 - r1 - r2: negative when the interiors overlap.
inline double dist(const Circle& a, const Circle& b) { return (a.c - b.c).norm() - a.r - b.r; }

inline bool tangent(const Circle& a, const Circle& b, double tau = kTau) {
  return std::abs(dist(a, b)) <= tau * std::max(a.r, b.r);
}

inline bool overlapping(const Circle& a, const Circle& b, double tau = kTau) {
  return dist(a, b) < -tau * std::max(a.r, b.r);
}

struct PlacedCircle {
  Circle circle;
  Player owner = Player::builder;
  int move_index = -1;
};

struct Violation {
  int i = -1, j = -1;
  double depth = 0;
};

class Packing {
  using BPoint = boost::geometry::model::point<double, 2, boost::geometry::cs::cartesian>;
  using BBox = boost::geometry::model::box<BPoint>;
  using Entry = std::pair<BBox, int>;

public:
  double tau = kTau;

  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const std::vector<PlacedCircle>& items() const { return items_; }
  const Circle& operator[](int i) const { return items_[static_cast<std::size_t>(i)].circle; }
  const PlacedCircle& at(int i) const { return items_.at(static_cast<std::size_t>(i)); }

  /// Appends without a legality check; returns the new index.
  int add(const Circle& c, Player owner = Player::builder, int move_index = -1) {
    items_.push_back({c, owner, move_index});
    tree_.insert({box(c, 0), size() - 1});
    lo_ = {std::min(lo_.x, c.c.x - c.r), std::min(lo_.y, c.c.y - c.r)};
    hi_ = {std::max(hi_.x, c.c.x + c.r), std::max(hi_.y, c.c.y + c.r)};
    return size() - 1;
  }

  /// Indices whose bounding boxes meet the box of `c` grown by `margin`.
  std::vector<int> near(const Circle& c, double margin = 0) const {
    std::vector<Entry> hits;
    tree_.query(boost::geometry::index::intersects(box(c, margin)), std::back_inserter(hits));
    std::vector<int> out;
    out.reserve(hits.size());
    for (const auto& h : hits) out.push_back(h.second);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The deepest circle that `c` would overlap, if any.
  std::optional<Violation> blocker(const Circle& c) const {
    std::optional<Violation> worst;
    for (int j : near(c)) {
      const Circle& o = (*this)[j];
      if (!overlapping(c, o, tau)) continue;
      double depth = -dist(c, o);
      if (!worst || depth > worst->depth) worst = Violation{-1, j, depth};
    }
    return worst;
  }

  bool fits(const Circle& c) const { return !blocker(c); }

  /// min over circles of |p - centre| - r, +inf when empty; negative inside
  /// a circle.
  double clearance(Point p) const {
    namespace bgi = boost::geometry::index;
    double best = kInf;
    auto dist_to = [&](const Entry& e) { return (p - (*this)[e.second].c).norm() - (*this)[e.second].r; };
    std::vector<Entry> hits;
    tree_.query(bgi::nearest(BPoint(p.x, p.y), 8), std::back_inserter(hits));
    for (const auto& e : hits) best = std::min(best, dist_to(e));
    if (!std::isfinite(best)) return best;
    // A closer circle has its box within `best` of p.
    hits.clear();
    tree_.query(bgi::intersects(box({p, 0}, std::max(best, 0.0))), std::back_inserter(hits));
    for (const auto& e : hits) best = std::min(best, dist_to(e));
    return best;
  }

  /// Centre and half-extent of the bounding box of all circles.
  std::pair<Point, double> bounds() const {
    if (empty()) return {{0, 0}, 0};
    return {(lo_ + hi_) * 0.5, std::max(hi_.x - lo_.x, hi_.y - lo_.y) / 2};
  }

private:
  static BBox box(const Circle& c, double margin) {
    double e = c.r + margin;
    return BBox(BPoint(c.c.x - e, c.c.y - e), BPoint(c.c.x + e, c.c.y + e));
  }

  std::vector<PlacedCircle> items_;
  Point lo_{kInf, kInf}, hi_{-kInf, -kInf};
  boost::geometry::index::rtree<Entry, boost::geometry::index::rstar<16>> tree_;
};

/// ok (nullopt) or the worst overlapping pair.
inline std::optional<Violation> validate_packing(const Packing& p) {
  std::optional<Violation> worst;
  for (int i = 0; i < p.size(); ++i) {
    for (int j : p.near(p[i])) {
      if (j <= i || !overlapping(p[i], p[j], p.tau)) continue;
      double depth = -dist(p[i], p[j]);
      if (!worst || depth > worst->depth) worst = Violation{i, j, depth};
    }
  }
  return worst;
}

inline std::vector<int> tangent_to(const Packing& p, int i) {
  std::vector<int> out;
  for (int j : p.near(p[i], p.tau * p[i].r))
    if (j != i && tangent(p[i], p[j], p.tau)) out.push_back(j);
  return out;
}

inline Graph contact_graph(const Packing& p) {
  Graph g(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j : tangent_to(p, i))
      if (j > i) g.add_edge(i, j);
  return g;
}

/// Contact graph restricted to `keep` (vertex k of the result is keep[k]).
inline Graph contact_graph(const Packing& p, const std::vector<int>& keep) {
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = static_cast<int>(k);
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (int j : tangent_to(p, keep[k]))
      if (index[j] > static_cast<int>(k)) g.add_edge(static_cast<int>(k), index[j]);
  return g;
}

}  // namespace parena
