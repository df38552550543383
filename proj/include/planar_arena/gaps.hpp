#pragma once

// Surrounds, gap points and Spoiler's blocker circle, plus interstice regions.

#include <functional>
#include <numbers>

#include "planar_arena/descartes.hpp"

namespace parena {

inline constexpr double kTwoPi = 2 * std::numbers::pi;

inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

inline double angle_to(const Circle& from, const Circle& to) {
  return wrap_angle(std::atan2(to.c.y - from.c.y, to.c.x - from.c.x));
}

/// A chain of circles around p[target]: an induced cycle of the contact graph,
/// all tangent to it and enclosing it. Shortest one found, or nullopt.
inline std::optional<std::vector<int>> surrounds(const Packing& p, int target) {
  const Circle& t = p[target];
  auto nb = tangent_to(p, target);
  const int k = static_cast<int>(nb.size());
  if (k < 3) return std::nullopt;
  std::vector<double> ang(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ang[i] = angle_to(t, p[nb[i]]);
  // i -> j when the two touch and j lies less than half a turn ccw of i.
  std::vector<std::vector<std::pair<int, double>>> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !tangent(p[nb[i]], p[nb[j]], p.tau)) continue;
      double step = wrap_angle(ang[j] - ang[i]);
      if (step > 0 && step < std::numbers::pi) out[i].push_back({j, step});
    }
  std::optional<std::vector<int>> best;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  std::function<void(int, int, double)> walk = [&](int start, int at, double turned) {
    if (best && path.size() >= best->size()) return;
    for (auto [j, step] : out[at]) {
      double total = turned + step;
      if (j == start && std::abs(total - kTwoPi) < 1e-6) {
        best.emplace();
        for (int v : path) best->push_back(nb[v]);
        return;
      }
      if (used[j] || j < start || total >= kTwoPi) continue;
      used[j] = 1;
      path.push_back(j);
      walk(start, j, total);
      path.pop_back();
      used[j] = 0;
    }
  };
  for (int s = 0; s < k; ++s) {
    used[s] = 1;
    path = {s};
    walk(s, s, 0);
    used[s] = 0;
  }
  return best;
}

inline bool is_inner(const Packing& p, int i) { return surrounds(p, i).has_value(); }

/// Closed arc of angles [start, start + length] on a circle.
struct Arc {
  double start = 0, length = 0;
  double at(double t) const { return wrap_angle(start + t * length); }
};

/// Gap points of p[omega]: the boundary minus the minor arcs spanned by
/// touching pairs of its neighbours. Empty when omega is surrounded.
inline std::vector<Arc> gap_points(const Packing& p, int omega) {
  const Circle& o = p[omega];
  auto nb = tangent_to(p, omega);
  std::vector<std::pair<double, double>> cover;  // [a, b] with a <= b, unwrapped
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (!tangent(p[nb[i]], p[nb[j]], p.tau)) continue;
      double a = angle_to(o, p[nb[i]]), b = angle_to(o, p[nb[j]]);
      double step = wrap_angle(b - a);
      if (step > std::numbers::pi) {
        std::swap(a, b);
        step = kTwoPi - step;
      }
      if (a + step <= kTwoPi) {
        cover.push_back({a, a + step});
      } else {
        cover.push_back({a, kTwoPi});
        cover.push_back({0, a + step - kTwoPi});
      }
    }
  if (cover.empty()) return {Arc{0, kTwoPi}};
  std::sort(cover.begin(), cover.end());
  std::vector<std::pair<double, double>> merged;
  for (auto c : cover) {
    if (!merged.empty() && c.first <= merged.back().second + 1e-12)
      merged.back().second = std::max(merged.back().second, c.second);
    else
      merged.push_back(c);
  }
  std::vector<Arc> gaps;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    double from = merged[i].second;
    double to = i + 1 < merged.size() ? merged[i + 1].first : merged[0].first + kTwoPi;
    if (to - from > 1e-12) gaps.push_back({wrap_angle(from), to - from});
  }
  return gaps;
}

/// Sup of radii of circles externally tangent to p[omega] at angle `theta`
/// that keep the packing valid; +inf when unbounded, 0 at a tangency point.
inline double max_radius_at(const Packing& p, int omega, double theta) {
  const Circle& o = p[omega];
  const Point u = polar(theta);
  const Point P = o.c + u * o.r;
  double best = kInf;
  for (int j = 0; j < p.size(); ++j) {
    if (j == omega) continue;
    const Circle& c = p[j];
    // |P + r u - c| >= r + rho  <=>  r * 2 (w.u - rho) + |w|^2 - rho^2 >= 0
    Point w = P - c.c;
    double A = 2 * (w.dot(u) - c.r);
    double B = std::max(0.0, w.dot(w) - c.r * c.r);
    if (A < 0) best = std::min(best, B / -A);
  }
  return best;
}

/// min(cap, max_radius_at): only obstacles near the radius-cap circle count.
inline double max_radius_at(const Packing& p, int omega, double theta, double cap) {
  const Circle& o = p[omega];
  const Point u = polar(theta);
  const Point P = o.c + u * o.r;
  double best = cap;
  for (int j : p.near({P + u * cap, cap})) {
    if (j == omega) continue;
    const Circle& c = p[j];
    Point w = P - c.c;
    double A = 2 * (w.dot(u) - c.r);
    double B = std::max(0.0, w.dot(w) - c.r * c.r);
    if (A < 0) best = std::min(best, B / -A);
  }
  return best;
}

/// Argmax of max_radius_at over the gap points.
struct GapAnalysis {
  std::vector<Arc> arcs;
  double theta = 0;   // T
  double r_star = 0;  // R(T), +inf when unbounded
};

inline GapAnalysis analyse_gaps(const Packing& p, int omega, int samples = 512) {
  GapAnalysis g;
  g.arcs = gap_points(p, omega);
  if (g.arcs.empty()) fail(errc::precondition, "circle is surrounded");
  g.r_star = -1;
  auto R = [&](double th) { return max_radius_at(p, omega, th); };
  for (const auto& arc : g.arcs) {
    int best_i = 0;
    double best_r = -1;
    for (int i = 0; i < samples; ++i) {
      double r = R(arc.at(static_cast<double>(i) / (samples - 1)));
      if (r > best_r) {
        best_r = r;
        best_i = i;
      }
    }
    double theta = arc.at(static_cast<double>(best_i) / (samples - 1));
    if (std::isfinite(best_r)) {
      // Golden-section refinement between the neighbouring samples.
      double lo = std::max(0.0, (best_i - 1.0) / (samples - 1)), hi = std::min(1.0, (best_i + 1.0) / (samples - 1));
      const double phi = (std::sqrt(5.0) - 1) / 2;
      double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
      double ra = R(arc.at(a)), rb = R(arc.at(b));
      while ((hi - lo) * arc.length * p[omega].r > 1e-10) {
        if (ra < rb) {
          lo = a;
          a = b;
          ra = rb;
          b = lo + phi * (hi - lo);
          rb = R(arc.at(b));
        } else {
          hi = b;
          b = a;
          rb = ra;
          a = hi - phi * (hi - lo);
          ra = R(arc.at(a));
        }
      }
      double t = (lo + hi) / 2, rt = R(arc.at(t));
      if (rt > best_r) {
        best_r = rt;
        theta = arc.at(t);
      }
    }
    if (best_r > g.r_star) {
      g.r_star = best_r;
      g.theta = theta;
    }
    if (!std::isfinite(g.r_star)) break;
  }
  return g;
}

struct GammaBlock {
  Circle circle;
  double gap = 0;      // distance from omega
  bool bounded = false;
  double r_star = 0, eta = 0;
};

/// Spoiler's blocker next to p[omega]: any later chain surrounding omega
/// through the gap needs at least d circles.
inline GammaBlock gamma_block(const Packing& p, int omega, int d) {
  const Circle o = p[omega];
  GapAnalysis g = analyse_gaps(p, omega);
  GammaBlock out;
  out.r_star = g.r_star;
  if (!std::isfinite(g.r_star) || g.r_star > o.r) {
    // A copy of omega fits: place it at half the width gap, staying inside
    // the tangent circle of radius R(T).
    out.gap = width(o.r, o.r, d) / 2;
    if (std::isfinite(g.r_star)) out.gap = std::min(out.gap, (g.r_star - o.r) / 2);
    out.circle = {o.c + polar(g.theta) * (2 * o.r + out.gap), o.r};
    return out;
  }
  out.bounded = true;
  out.eta = g.r_star * g.r_star / (g.r_star + o.r);
  double rad = g.r_star - out.eta;
  out.gap = std::min(out.eta, width(o.r, rad, d));
  out.circle = {o.c + polar(g.theta) * (o.r + out.gap + rad), rad};
  return out;
}

inline Circle gamma_blocker(const Packing& p, int omega, int d) { return gamma_block(p, omega, d).circle; }

// --- Interstices ----------------------------------------------------------

/// Curvilinear triangle bounded by three mutually tangent circles.
using Interstice = std::array<Circle, 3>;

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Whether point q lies in the interstice (inside the triangle of centres and
/// outside all three circles).
inline bool in_interstice(Point q, const Interstice& f) {
  double s0 = cross(f[1].c - f[0].c, q - f[0].c);
  double s1 = cross(f[2].c - f[1].c, q - f[1].c);
  double s2 = cross(f[0].c - f[2].c, q - f[2].c);
  bool inside = (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0);
  if (!inside) return false;
  for (const auto& c : f)
    if ((q - c.c).norm() < c.r) return false;
  return true;
}

/// The candidate is legal in p and its centre lies in the interstice.
inline bool circle_fits_region(const Packing& p, const Circle& candidate, const Interstice& f) {
  return in_interstice(candidate.c, f) && p.fits(candidate);
}

/// Incircle of an interstice: the inner Soddy circle.
inline Circle incircle(const Interstice& f) { return soddy_circles(f[0], f[1], f[2]).inner; }

}  // namespace parena
