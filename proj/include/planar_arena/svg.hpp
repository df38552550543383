#pragma once

// SVG output for both games. Edge-game states get a straight-line drawing
// per component: the outer walk on a circle, everything else at the average
// of its neighbours (a barycentric embedding, crossing-free whenever the
// component is 3-connected, e.g. every triangulation). Residents are drawn
// shrunk inside their container face.

#include <numbers>
#include <sstream>

#include "planar_arena/circle.hpp"
#include "planar_arena/plane.hpp"

namespace parena {

namespace detail {

inline double segment_distance(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = ab.dot(ab);
  double t = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + ab * t)).norm();
}

// Lays out the component of `rep` inside the disk (centre, radius), then its
// residents inside its faces.
inline void place_component(const PlaneState& s, int rep, Point centre, double radius, std::vector<Point>& at) {
  const auto verts = s.component_vertices(rep);
  const auto& info = s.component(rep);
  if (info.outer_dart < 0) {
    at[rep] = centre;
    return;
  }
  const Faces& f = s.faces();
  std::vector<int> ring;
  std::vector<char> fixed(static_cast<std::size_t>(s.n()), 0);
  for (int d : f.walks[s.outer_face(rep)]) {
    int v = s.tail(d);
    if (!fixed[v]) {
      fixed[v] = 1;
      ring.push_back(v);
    }
  }
  for (std::size_t k = 0; k < ring.size(); ++k)
    at[ring[k]] = centre + polar(-2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ring.size())) * radius;
  for (int v : verts)
    if (!fixed[v]) at[v] = centre;
  for (int sweep = 0; sweep < 20000; ++sweep) {
    double moved = 0;
    for (int v : verts) {
      if (fixed[v]) continue;
      Point sum{0, 0};
      for (int d : s.rotation(v)) sum = sum + at[s.head(d)];
      Point next = sum * (1.0 / static_cast<double>(s.degree(v)));
      moved = std::max(moved, (next - at[v]).norm());
      at[v] = next;
    }
    if (moved < 1e-13 * radius) break;
  }
  // Residents of each inner face of this component.
  for (int face = 0; face < static_cast<int>(f.walks.size()); ++face) {
    if (f.outer[face] || f.rep[face] != rep) continue;
    auto res = s.residents(face);
    if (res.empty()) continue;
    Point c{0, 0};
    for (int d : f.walks[face]) c = c + at[s.tail(d)];
    c = c * (1.0 / static_cast<double>(f.walks[face].size()));
    double room = kInf;
    for (int d : f.walks[face]) room = std::min(room, segment_distance(c, at[s.tail(d)], at[s.head(d)]));
    double r = 0.8 * room / static_cast<double>(res.size());
    for (std::size_t k = 0; k < res.size(); ++k) {
      double x = (2.0 * static_cast<double>(k) + 1 - static_cast<double>(res.size())) * r;
      place_component(s, res[k], c + Point{x, 0}, 0.8 * r, at);
    }
  }
}

}  // namespace detail

/// Vertex positions for an edge-game state; top-level components in a row.
inline std::vector<Point> edge_layout(const PlaneState& s) {
  std::vector<Point> at(static_cast<std::size_t>(s.n()), Point{0, 0});
  auto top = s.residents(kGlobalRegion);
  for (std::size_t k = 0; k < top.size(); ++k) {
    double r = s.component_vertices(top[k]).size() > 1 ? 1.0 : 0.0;
    detail::place_component(s, top[k], {2.5 * static_cast<double>(k), 0}, r, at);
  }
  return at;
}

inline std::string fmt(double x) {
  std::ostringstream o;
  o.precision(6);
  o << x;
  return o.str();
}

inline std::string render_edge_svg(const PlaneState& s) {
  auto at = edge_layout(s);
  double x0 = -1.2, y0 = -1.2, x1 = 1.2, y1 = 1.2;
  for (const auto& p : at) {
    x0 = std::min(x0, p.x - 0.2);
    x1 = std::max(x1, p.x + 0.2);
  }
  const double scale = 200;
  auto X = [&](double x) { return fmt((x - x0) * scale); };
  auto Y = [&](double y) { return fmt((y1 - y) * scale); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((x1 - x0) * scale) << "\" height=\""
    << fmt((y1 - y0) * scale) << "\">\n";
  for (int e = 0; e < s.edge_count(); ++e) {
    auto [u, v] = s.edge(e);
    const char* colour = s.edge_owner(e) == Player::builder ? "#1f5fbf" : "#c0392b";
    o << "  <line class=\"edge " << to_string(s.edge_owner(e)) << "\" x1=\"" << X(at[u].x) << "\" y1=\"" << Y(at[u].y)
      << "\" x2=\"" << X(at[v].x) << "\" y2=\"" << Y(at[v].y) << "\" stroke=\"" << colour
      << "\" stroke-width=\"2\"/>\n";
  }
  for (int v = 0; v < s.n(); ++v) {
    o << "  <circle class=\"vertex\" cx=\"" << X(at[v].x) << "\" cy=\"" << Y(at[v].y)
      << "\" r=\"6\" fill=\"#222\"/>\n";
    o << "  <text x=\"" << X(at[v].x) << "\" y=\"" << Y(at[v].y) << "\" dx=\"8\" dy=\"-8\" font-size=\"12\">" << v
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

/// Circles filled by owner, plus the contact graph between centres.
inline std::string render_packing_svg(const Packing& p, bool contacts = true) {
  double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
  if (!p.empty()) {
    auto [c, half] = p.bounds();
    x0 = c.x - half;
    x1 = c.x + half;
    y0 = c.y - half;
    y1 = c.y + half;
  }
  const double pad = 0.05 * (x1 - x0), size = 800;
  const double scale = size / (x1 - x0 + 2 * pad);
  auto X = [&](double x) { return fmt((x - x0 + pad) * scale); };
  auto Y = [&](double y) { return fmt((y1 - y + pad) * scale); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
    << fmt((y1 - y0 + 2 * pad) * scale) << "\">\n";
  for (const auto& it : p.items()) {
    const Circle& c = it.circle;
    const char* fill = it.owner == Player::builder ? "#cfe0fa" : "#f6d0cb";
    o << "  <circle class=\"disk " << to_string(it.owner) << "\" cx=\"" << X(c.c.x) << "\" cy=\"" << Y(c.c.y)
      << "\" r=\"" << fmt(c.r * scale) << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
  }
  if (contacts)
    for (int i = 0; i < p.size(); ++i)
      for (int j : tangent_to(p, i)) {
        if (j < i) continue;
        o << "  <line class=\"contact\" x1=\"" << X(p[i].c.x) << "\" y1=\"" << Y(p[i].c.y) << "\" x2=\""
          << X(p[j].c.x) << "\" y2=\"" << Y(p[j].c.y) << "\" stroke=\"#111\" stroke-width=\"1\"/>\n";
      }
  o << "</svg>\n";
  return o.str();
}

}  // namespace parena
