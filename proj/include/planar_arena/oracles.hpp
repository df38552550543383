#pragma once

// Independent checks used by the tests and the bench.

#include "planar_arena/descartes.hpp"

namespace parena {

/// Greedy chain through the gap between a radius-r1 circle centred at
/// (0, -r1) and a radius-r2 circle centred at (0, eps + r2): start with the
/// circle filling the gap at x = 0, then repeatedly add the circle tangent to
/// both and to the previous one, moving right. Returns how many circles come
/// before the first one reaching x = x0.
inline int width_chain_count(double r1, double r2, double eps, double x0) {
  const Point o1{0, -r1}, o2{0, eps + r2};
  // Circle centred at abscissa x tangent to both: bisection on the ordinate.
  auto at = [&](double x) {
    double lo = -r1, hi = eps + r2;
    for (int i = 0; i < 200; ++i) {
      double y = (lo + hi) / 2;
      double g = (Point{x, y} - o1).norm() - r1 - ((Point{x, y} - o2).norm() - r2);
      (g < 0 ? lo : hi) = y;
    }
    double y = (lo + hi) / 2;
    return Circle{{x, y}, (Point{x, y} - o1).norm() - r1};
  };
  std::vector<Circle> chain{at(0)};
  while (chain.back().c.x + chain.back().r < x0) {
    const Circle prev = chain.back();
    auto gap = [&](double x) {
      Circle c = at(x);
      return (c.c - prev.c).norm() - c.r - prev.r;
    };
    double lo = prev.c.x, hi = prev.c.x + 4 * prev.r;
    while (gap(hi) < 0) hi += 4 * prev.r;
    for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++i) {
      double mid = (lo + hi) / 2;
      (gap(mid) < 0 ? lo : hi) = mid;
    }
    chain.push_back(at(hi));
    if (chain.size() > 1000000) break;
  }
  return static_cast<int>(chain.size()) - 1;
}

}  // namespace parena
