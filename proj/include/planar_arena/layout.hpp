#pragma once

// Numerical circle packing of a planar graph: triangulate, relax radii until
// every interior angle sum is 2 pi, then place centres face by face.

#include <map>
#include <numbers>
#include <queue>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include "planar_arena/gaps.hpp"
#include "planar_arena/graph_props.hpp"

namespace parena {

inline constexpr int kLayoutBudget = 200;

namespace detail {

using LayoutGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                          boost::property<boost::vertex_index_t, int>,
                                          boost::property<boost::edge_index_t, int>>;
using EmbeddingStorage = std::vector<std::vector<boost::graph_traits<LayoutGraph>::edge_descriptor>>;
using Embedding = boost::iterator_property_map<EmbeddingStorage::iterator,
                                               boost::property_map<LayoutGraph, boost::vertex_index_t>::type>;

inline void reindex_edges(LayoutGraph& g) {
  int i = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(boost::edge_index, g, *it, i++);
}

inline void embed(LayoutGraph& g, EmbeddingStorage& store) {
  reindex_edges(g);
  store.assign(boost::num_vertices(g), {});
  Embedding emb(store.begin(), boost::get(boost::vertex_index, g));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = emb))
    fail(errc::non_planar, "graph is not planar");
}

struct FaceCollector : public boost::planar_face_traversal_visitor {
  std::vector<std::vector<int>> faces;
  void begin_face() { faces.emplace_back(); }
  template <typename V>
  void next_vertex(V v) { faces.back().push_back(static_cast<int>(v)); }
};

/// Faces of a maximal planar supergraph of h (n >= 3).
inline std::vector<std::array<int, 3>> triangulate(const Graph& h) {
  const int n = h.size();
  LayoutGraph g(static_cast<std::size_t>(n));
  for (auto [u, v] : h.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g);
  EmbeddingStorage store;
  embed(g, store);
  boost::make_connected(g);
  embed(g, store);
  Embedding emb(store.begin(), boost::get(boost::vertex_index, g));
  boost::make_biconnected_planar(g, emb);
  embed(g, store);
  emb = Embedding(store.begin(), boost::get(boost::vertex_index, g));
  boost::make_maximal_planar(g, emb);
  embed(g, store);
  emb = Embedding(store.begin(), boost::get(boost::vertex_index, g));
  FaceCollector faces;
  boost::planar_face_traversal(g, emb, faces);
  std::vector<std::array<int, 3>> out;
  for (const auto& f : faces.faces) {
    if (f.size() != 3) fail(errc::no_convergence, "triangulation left a face of length " + std::to_string(f.size()));
    out.push_back({f[0], f[1], f[2]});
  }
  if (static_cast<int>(out.size()) != 2 * n - 4) fail(errc::no_convergence, "triangulation has parallel edges");
  return out;
}

// Angle at a circle of radius x between tangent neighbours of radii y, z.
inline double corner_angle(double x, double y, double z) {
  double a = x + y, b = x + z, c = y + z;
  double cosv = (a * a + b * b - c * c) / (2 * a * b);
  return std::acos(std::clamp(cosv, -1.0, 1.0));
}

}  // namespace detail

struct LayoutReport {
  Packing packing;
  Graph triangulation;
  int sweeps = 0;
  double angle_error = 0;  // max |angle sum - 2 pi| over interior vertices
  double residual = 0;     // max |dist| over triangulation edges
};

/// Circle packing whose contact graph contains h (vertex i -> circle i).
inline LayoutReport layout_packing_report(const Graph& h) {
  const int n = h.size();
  if (n < 1 || n > kLayoutBudget) fail(errc::invalid_parameter, "layout needs 1..200 vertices");
  if (!is_planar(h)) fail(errc::non_planar, "graph is not planar");
  LayoutReport rep{Packing{}, Graph(n), 0, 0, 0};
  if (n <= 2) {
    rep.packing.add({{0, 0}, 1});
    if (n == 2) {
      rep.packing.add({{2, 0}, 1});
      rep.triangulation.add_edge(0, 1);
    }
    return rep;
  }
  auto faces = detail::triangulate(h);
  for (auto f : faces)
    for (int i = 0; i < 3; ++i) rep.triangulation.add_edge(f[i], f[(i + 1) % 3]);

  // Corners of each vertex, as (left, right) neighbour pairs.
  std::vector<std::vector<std::pair<int, int>>> corners(static_cast<std::size_t>(n));
  for (auto f : faces)
    for (int i = 0; i < 3; ++i) corners[f[i]].push_back({f[(i + 1) % 3], f[(i + 2) % 3]});
  const auto outer = faces.front();
  std::vector<char> boundary(static_cast<std::size_t>(n), 0);
  for (int v : outer) boundary[v] = 1;
  std::vector<double> r(static_cast<std::size_t>(n), 1.0);

  auto angle_sum = [&](int v) {
    double s = 0;
    for (auto [a, b] : corners[v]) s += detail::corner_angle(r[v], r[a], r[b]);
    return s;
  };
  // Uniform-neighbour radius update; converges geometrically.
  const double target = 2 * std::numbers::pi;
  for (; rep.sweeps < 200000; ++rep.sweeps) {
    double err = 0;
    for (int v = 0; v < n; ++v) {
      if (boundary[v]) continue;
      double theta = angle_sum(v);
      err = std::max(err, std::abs(theta - target));
      double k = static_cast<double>(corners[v].size());
      double beta = std::sin(theta / (2 * k)), delta = std::sin(std::numbers::pi / k);
      double rhat = beta * r[v] / (1 - beta);
      r[v] = (1 - delta) / delta * rhat;
    }
    rep.angle_error = err;
    if (err < 1e-13) break;
  }
  if (rep.angle_error > 1e-8) fail(errc::no_convergence, "angle sums did not converge");

  // Place the outer face, then flood across shared edges.
  std::vector<Point> at(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  // Places w tangent to u and v, on the far side of uv from `away` (on the
  // near side when uv borders the outer face, whose region is the exterior).
  auto place_third = [&](int u, int v, int w, int away, bool near) {
    double alpha = detail::corner_angle(r[u], r[v], r[w]);
    Point d = at[v] - at[u];
    double base = std::atan2(d.y, d.x);
    Point c1 = at[u] + polar(base + alpha) * (r[u] + r[w]);
    Point c2 = at[u] + polar(base - alpha) * (r[u] + r[w]);
    if (away < 0) {
      at[w] = c1;
    } else {
      double side = cross(d, at[away] - at[u]);
      at[w] = (cross(d, c1 - at[u]) * side < 0) != near ? c1 : c2;
    }
    placed[w] = 1;
  };
  at[outer[0]] = {0, 0};
  at[outer[1]] = {r[outer[0]] + r[outer[1]], 0};
  placed[outer[0]] = placed[outer[1]] = 1;
  place_third(outer[0], outer[1], outer[2], -1, false);

  std::map<std::pair<int, int>, std::vector<int>> by_edge;  // edge -> faces
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int k = 0; k < 3; ++k) {
      int a = faces[i][k], b = faces[i][(k + 1) % 3];
      by_edge[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
    }
  std::vector<char> done(faces.size(), 0);
  std::queue<int> todo;
  done[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    const int fi = todo.front();
    auto f = faces[static_cast<std::size_t>(fi)];
    todo.pop();
    for (int k = 0; k < 3; ++k) {
      int a = f[k], b = f[(k + 1) % 3], x = f[(k + 2) % 3];
      for (int g : by_edge[{std::min(a, b), std::max(a, b)}]) {
        if (done[g]) continue;
        done[g] = 1;
        todo.push(g);
        for (int w : faces[g])
          if (!placed[w]) place_third(a, b, w, x, fi == 0);
      }
    }
  }
  for (int v = 0; v < n; ++v) rep.packing.add({at[v], r[v]});
  for (auto [u, v] : rep.triangulation.edges())
    rep.residual = std::max(rep.residual, std::abs(dist(rep.packing[u], rep.packing[v])));
  return rep;
}

inline Packing layout_packing(const Graph& h) { return layout_packing_report(h).packing; }

/// Smallest circle around a packing's bounding box centre containing it.
inline Circle enclosing_circle(const Packing& p) {
  auto [c, half] = p.bounds();
  double R = 0;
  for (const auto& it : p.items()) R = std::max(R, (it.circle.c - c).norm() + it.circle.r);
  return {c, R};
}

/// Similarity image of `p` inside the disk `target`.
inline std::vector<Circle> fit_into(const Packing& p, const Circle& target) {
  Circle e = enclosing_circle(p);
  double k = target.r / e.r;
  std::vector<Circle> out;
  for (const auto& it : p.items()) out.push_back({target.c + (it.circle.c - e.c) * k, it.circle.r * k});
  return out;
}

}  // namespace parena
