#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "planar_arena/error.hpp"

namespace parena {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) fail(errc::invalid_parameter, "negative vertex count");
  }
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int size() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }

  bool add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) fail(errc::invalid_parameter, "loop");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
    return true;
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size()) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  /// Sorted edge list with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Induced subgraph; vertex i of the result is keep[i].
  Graph induced(const std::vector<int>& keep) const {
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (int w : adj_[keep[i]])
        if (index[w] > static_cast<int>(i)) g.add_edge(static_cast<int>(i), index[w]);
    return g;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
  void check(int v) const {
    if (v < 0 || v >= size()) fail(errc::invalid_parameter, "vertex out of range");
  }

  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
};

namespace fixtures {

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph k33() {
  Graph g(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  return g;
}

// K_{2,2,2}; antipodal pairs are (0,1), (2,3), (4,5).
inline Graph octahedron() {
  Graph g(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != (i ^ 1)) g.add_edge(i, j);
  return g;
}

inline Graph pentagonal_prism() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 1) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// The 6-vertex triangulation that contains a K4 (the Apollonian one).
inline Graph triangulation6_apollonian() {
  return Graph(6, {{1, 3}, {3, 2}, {2, 1}, {1, 0}, {0, 2}, {2, 4},
                   {4, 1}, {1, 5}, {5, 4}, {4, 0}, {0, 3}, {2, 5}});
}

// Contact graph of the six-circle figure: outer triangle A,B,C, centre O,
// and the two reflections P (across AB) and Q (across AC).
inline Graph contact_figure() {
  // A=0 B=1 C=2 O=3 P=4 Q=5
  return Graph(6, {{0, 4}, {4, 1}, {1, 2}, {2, 5}, {5, 0}, {0, 1},
                   {1, 3}, {3, 2}, {2, 0}, {0, 3}});
}

}  // namespace fixtures

}  // namespace parena
