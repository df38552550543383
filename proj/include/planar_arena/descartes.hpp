#pragma once

// Tangent-circle constructions: Soddy circles via Descartes' theorem (complex
// centre form), a Newton polish for circles tangent to three given ones, and
// the width() gap estimate.

#include <array>
#include <complex>

#include "planar_arena/circle.hpp"

namespace parena {

/// Newton on (x, y, r) for |z - z_i| = r + s * r_i, i = 1..3, where s = +1
/// asks for external tangency and s = -1 for a circle enclosing all three.
/// Returns nullopt when the iteration leaves the plausible region.
inline std::optional<Circle> tangent_circle(const std::array<Circle, 3>& in, Circle guess, double s = 1) {
  double x = guess.c.x, y = guess.c.y, r = guess.r;
  double scale = std::max({in[0].r, in[1].r, in[2].r, guess.r});
  for (int it = 0; it < 60; ++it) {
    double J[3][3], F[3];
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      double dx = x - in[i].c.x, dy = y - in[i].c.y, len = std::hypot(dx, dy);
      if (len == 0) return std::nullopt;
      F[i] = len - (r + s * in[i].r);
      J[i][0] = dx / len;
      J[i][1] = dy / len;
      J[i][2] = -1;
      worst = std::max(worst, std::abs(F[i]));
    }
    if (worst <= 1e-15 * scale) break;
    double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                 J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    if (std::abs(det) < 1e-300) return std::nullopt;
    // Cramer's rule for J * step = F.
    auto col = [&](int k) {
      double M[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = j == k ? F[i] : J[i][j];
      return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
             det;
    };
    double sx = col(0), sy = col(1), sr = col(2);
    x -= sx;
    y -= sy;
    r -= sr;
    if (!(r > 0) || !std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
  }
  return Circle{{x, y}, r};
}

/// Largest |residual| of `c` against the tangency equations above.
inline double tangency_residual(const Circle& c, const std::array<Circle, 3>& in, double s = 1) {
  double worst = 0;
  for (const auto& o : in) worst = std::max(worst, std::abs((c.c - o.c).norm() - (c.r + s * o.r)));
  return worst;
}

struct SoddyPair {
  Circle inner;
  std::optional<Circle> outer;  // nullopt when the second solution is a line
  bool outer_encloses = false;  // negative curvature: never a legal move
};

/// Both Descartes solutions for three mutually tangent circles.
inline SoddyPair soddy_circles(const Circle& a, const Circle& b, const Circle& c, double tau = kTau) {
  const std::array<Circle, 3> in{a, b, c};
  for (int i = 0; i < 3; ++i)
    if (!tangent(in[i], in[(i + 1) % 3], tau)) fail(errc::invalid_configuration, "inputs are not mutually tangent");
  // Work relative to the first centre to keep the complex products small.
  using C = std::complex<double>;
  const Point o = a.c;
  std::array<double, 3> k{1 / a.r, 1 / b.r, 1 / c.r};
  std::array<C, 3> z{C(0, 0), C(b.c.x - o.x, b.c.y - o.y), C(c.c.x - o.x, c.c.y - o.y)};
  double ksum = k[0] + k[1] + k[2];
  double kroot = 2 * std::sqrt(std::max(0.0, k[0] * k[1] + k[1] * k[2] + k[2] * k[0]));
  C wsum = k[0] * z[0] + k[1] * z[1] + k[2] * z[2];
  C wroot = 2.0 * std::sqrt(k[0] * k[1] * z[0] * z[1] + k[1] * k[2] * z[1] * z[2] + k[2] * k[0] * z[2] * z[0]);

  auto solve = [&](double k4, double s) {
    // Pair the curvature with whichever centre sign fits better.
    Circle best{};
    double err = kInf;
    for (double sign : {1.0, -1.0}) {
      C w = (wsum + sign * wroot) / k4;
      Circle cand{{o.x + w.real(), o.y + w.imag()}, 1 / std::abs(k4)};
      double e = tangency_residual(cand, in, s);
      if (e < err) {
        err = e;
        best = cand;
      }
    }
    if (auto polished = tangent_circle(in, best, s)) best = *polished;
    return best;
  };

  SoddyPair out;
  out.inner = solve(ksum + kroot, 1);
  double k4 = ksum - kroot;
  if (std::abs(k4) > 1e-12 * ksum) {
    out.outer_encloses = k4 < 0;
    out.outer = solve(k4, k4 < 0 ? -1 : 1);
  }
  return out;
}

/// Parameters of the gap estimate for circles of radii r1 (below) and r2
/// (above). The parabolas -delta1 x^2 and eps + delta2 x^2 bound the circles
/// over (-a, a); x0 is the corridor half-width the chain count uses.
struct WidthParams {
  double delta1 = 0, delta2 = 0, a = 0, x0 = 0, epsilon = 0;
};

inline WidthParams width_params(double r1, double r2, int d) {
  if (!(r1 > 0 && r2 > 0) || d < 1) fail(errc::invalid_parameter, "width needs positive radii and d >= 1");
  WidthParams w;
  w.delta1 = 1 / r1;
  w.delta2 = 1 / r2;
  w.a = std::min(r1, r2) / 2;
  const double D = w.delta1 + w.delta2;
  // k >= x0 / (2 (eps + D x0^2)) peaks at x0 = sqrt(eps / D), where it is
  // 1 / (4 sqrt(eps D)); ask for d there, keep x0 inside (-a, a), then halve.
  double eps = 1 / (16.0 * d * d * D);
  eps = std::min(eps, w.a * w.a * D);
  w.epsilon = eps / 2;
  w.x0 = std::min(w.a, std::sqrt(w.epsilon / D));
  return w;
}

inline double width(double r1, double r2, int d) { return width_params(r1, r2, d).epsilon; }

/// Samples the parabola bounds over (-a, a).
inline bool width_params_hold(double r1, double r2, const WidthParams& w, int samples = 1001) {
  for (int i = 1; i < samples; ++i) {
    double x = -w.a + 2 * w.a * i / samples;
    double upper1 = std::sqrt(r1 * r1 - x * x) - r1;                  // top of the lower circle
    double lower2 = w.epsilon + r2 - std::sqrt(r2 * r2 - x * x);      // bottom of the upper circle
    if (-w.delta1 * x * x > upper1 + 1e-15 || w.epsilon + w.delta2 * x * x < lower2 - 1e-15) return false;
  }
  return true;
}

}  // namespace parena
