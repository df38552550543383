#pragma once

// Exact desk-scale verifiers: Hamiltonicity, Apollonian / partial 3-tree
// recognition, diameter, subgraph containment and separator certificates.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "planar_arena/graph.hpp"

namespace parena {

inline constexpr int kHamiltonBudget = 24;

namespace detail {

// dp[mask] = set of end vertices of paths that start at `start` and visit
// exactly `mask`.
inline std::vector<std::uint32_t> path_dp(const std::vector<std::uint32_t>& adj, int start) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  dp[std::size_t{1} << start] = 1u << start;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      int v = __builtin_ctz(ends);
      ends &= ends - 1;
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        int w = __builtin_ctz(next);
        next &= next - 1;
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return dp;
}

inline std::vector<std::uint32_t> masks(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> adj(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int w : g.neighbors(keep[i]))
      if (index[w] >= 0) adj[i] |= 1u << index[w];
  return adj;
}

inline void check_budget(const Graph& g) {
  if (g.size() > kHamiltonBudget)
    fail(errc::budget_exceeded, "Hamiltonicity budget is " + std::to_string(kHamiltonBudget) + " vertices");
}

}  // namespace detail

inline bool is_hamiltonian(const Graph& g) {
  detail::check_budget(g);
  const int n = g.size();
  if (n < 3) return false;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  auto adj = detail::masks(g, all);
  for (auto a : adj)
    if (__builtin_popcount(a) < 2) return false;
  auto dp = detail::path_dp(adj, 0);
  return (dp[(std::size_t{1} << n) - 1] & adj[0]) != 0;
}

/// Hamiltonian path from s to t in g, or in g minus `excluded` when given.
inline bool hamiltonian_path(const Graph& g, int s, int t, std::optional<int> excluded = std::nullopt) {
  detail::check_budget(g);
  if (s == t) fail(errc::invalid_parameter, "s == t");
  if (s < 0 || t < 0 || s >= g.size() || t >= g.size()) fail(errc::invalid_parameter, "endpoint out of range");
  if (excluded && (*excluded == s || *excluded == t)) fail(errc::invalid_parameter, "endpoint excluded");
  std::vector<int> keep;
  int si = -1, ti = -1;
  for (int v = 0; v < g.size(); ++v) {
    if (excluded && v == *excluded) continue;
    if (v == s) si = static_cast<int>(keep.size());
    if (v == t) ti = static_cast<int>(keep.size());
    keep.push_back(v);
  }
  auto adj = detail::masks(g, keep);
  auto dp = detail::path_dp(adj, si);
  return (dp[(std::size_t{1} << keep.size()) - 1] >> ti) & 1u;
}

struct OuterTriple {
  int u1, u2, u3;
};

/// Hamiltonian paths between every outer pair, plus near-Hamiltonian paths
/// avoiding the third outer vertex.
inline bool is_strongly_hamiltonian(const Graph& g, OuterTriple outer) {
  const std::array<int, 3> o{outer.u1, outer.u2, outer.u3};
  for (int i = 0; i < 3; ++i) {
    int a = o[i], b = o[(i + 1) % 3], c = o[(i + 2) % 3];
    if (!hamiltonian_path(g, a, b)) return false;
    if (!hamiltonian_path(g, a, b, c)) return false;
  }
  return true;
}

/// All-pairs BFS; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.size();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int seen = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          best = std::max(best, dist[w]);
          ++seen;
          q.push(w);
        }
    }
    if (seen != n) return std::nullopt;
  }
  return best;
}

/// Number of connected components of g after deleting `removed`.
inline int components_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.size()), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<char> seen(gone);
  int count = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

/// components(g - s) > |s|: certifies that g has no Hamiltonian cycle.
inline bool separator_witness_nonhamiltonian(const Graph& g, const std::vector<int>& s) {
  std::set<int> uniq(s.begin(), s.end());
  return components_without(g, s) > static_cast<int>(uniq.size());
}

inline constexpr int kPatternBudget = 10;

/// Non-induced subgraph containment by backtracking with degree pruning.
/// With `through`, only copies using that host vertex count.
inline bool contains_subgraph(const Graph& host, const Graph& pattern, std::optional<int> through = std::nullopt) {
  const int k = pattern.size();
  if (k > kPatternBudget) fail(errc::budget_exceeded, "pattern larger than 10 vertices");
  if (k == 0) return true;
  if (k > host.size() || pattern.edge_count() > host.edge_count()) return false;

  // Order: `root` first (highest degree by default), then always extend from
  // mapped vertices.
  auto order_from = [&](int root) {
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    while (static_cast<int>(order.size()) < k) {
      int best = -1, best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : pattern.neighbors(v)) links += placed[w];
        if (order.empty() && root >= 0 && v != root) continue;
        if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
    return order;
  };

  std::vector<int> order;
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(host.size()), 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == k) return true;
    int p = order[depth];
    int anchor = -1;
    for (int w : pattern.neighbors(p))
      if (image[w] >= 0) {
        anchor = image[w];
        break;
      }
    auto try_vertex = [&](int h) -> bool {
      if (used[h] || host.degree(h) < pattern.degree(p)) return false;
      for (int w : pattern.neighbors(p))
        if (image[w] >= 0 && !host.has_edge(h, image[w])) return false;
      image[p] = h;
      used[h] = 1;
      if (extend(depth + 1)) return true;
      image[p] = -1;
      used[h] = 0;
      return false;
    };
    if (depth == 0 && through) return try_vertex(*through);
    if (anchor >= 0) {
      for (int h : host.neighbors(anchor))
        if (try_vertex(h)) return true;
    } else {
      for (int h = 0; h < host.size(); ++h)
        if (try_vertex(h)) return true;
    }
    return false;
  };
  if (!through) {
    order = order_from(-1);
    return extend(0);
  }
  for (int root = 0; root < k; ++root) {
    order = order_from(root);
    if (extend(0)) return true;
  }
  return false;
}

/// Apollonian network (planar 3-tree) recognition: peel degree-3 vertices
/// whose neighbourhood is a triangle, then replay the construction forward
/// checking that every insertion lands in a current face.
inline bool is_apollonian(const Graph& g) {
  const int n = g.size();
  if (n < 3) return false;
  if (g.edge_count() != 3 * n - 6) return false;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<std::pair<int, std::array<int, 3>>> peeled;
  int remaining = n;
  bool progress = true;
  while (remaining > 3 && progress) {
    progress = false;
    for (int v = 0; v < n && remaining > 3; ++v) {
      if (!alive[v] || adj[v].size() != 3) continue;
      std::array<int, 3> t{};
      std::copy(adj[v].begin(), adj[v].end(), t.begin());
      if (!adj[t[0]].count(t[1]) || !adj[t[1]].count(t[2]) || !adj[t[0]].count(t[2])) continue;
      for (int w : t) adj[w].erase(v);
      adj[v].clear();
      alive[v] = 0;
      --remaining;
      peeled.emplace_back(v, t);
      progress = true;
    }
  }
  if (remaining != 3) return false;
  std::array<int, 3> base{};
  int idx = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) base[idx++] = v;
  if (!adj[base[0]].count(base[1]) || !adj[base[1]].count(base[2]) || !adj[base[0]].count(base[2]))
    return false;
  std::multiset<std::array<int, 3>> faces{base, base};
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto [v, t] = *it;
    auto f = faces.find(t);
    if (f == faces.end()) return false;
    faces.erase(f);
    auto add = [&](int a, int b, int c) {
      std::array<int, 3> x{a, b, c};
      std::sort(x.begin(), x.end());
      faces.insert(x);
    };
    add(t[0], t[1], v);
    add(t[1], t[2], v);
    add(t[0], t[2], v);
  }
  return true;
}

inline constexpr int kPartial3TreeBudget = 30;

inline bool is_planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(static_cast<std::size_t>(g.size()));
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Subgraph of some Apollonian network: planar with treewidth <= 3, which is
/// the class excluding K5, K3,3, the octahedron and the pentagonal prism as
/// minors. Treewidth is decided by a memoised search over elimination sets.
inline bool is_partial_3tree(const Graph& g) {
  const int n = g.size();
  if (n > kPartial3TreeBudget) fail(errc::budget_exceeded, "partial 3-tree budget is 30 vertices");
  if (n <= 4) return true;
  if (!is_planar(g)) return false;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= 1u << w;
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

  // Vertices outside `gone` reachable from v through paths inside `gone`.
  auto filled = [&](std::uint32_t gone, int v) {
    std::uint32_t reach = 0, frontier = 1u << v, visited = 1u << v;
    while (frontier) {
      int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      std::uint32_t nb = adj[x] & ~visited;
      visited |= nb;
      reach |= nb & ~gone;
      frontier |= nb & gone;
    }
    return reach & ~(1u << v);
  };

  std::unordered_set<std::uint32_t> dead;
  std::function<bool(std::uint32_t)> solve = [&](std::uint32_t gone) -> bool {
    for (;;) {
      std::uint32_t rest = all & ~gone;
      if (__builtin_popcount(rest) <= 4) return true;
      // Simplicial vertices of filled degree <= 3 are safe to eliminate.
      bool reduced = false;
      for (std::uint32_t r = rest; r; r &= r - 1) {
        int v = __builtin_ctz(r);
        std::uint32_t q = filled(gone, v);
        if (__builtin_popcount(q) > 3) continue;
        bool clique = true;
        for (std::uint32_t a = q; a && clique; a &= a - 1) {
          int x = __builtin_ctz(a);
          std::uint32_t need = q & ~(1u << x);
          if ((filled(gone, x) & need) != need) clique = false;
        }
        if (clique) {
          gone |= 1u << v;
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    if (__builtin_popcount(all & ~gone) <= 4) return true;
    if (dead.count(gone)) return false;
    for (std::uint32_t r = all & ~gone; r; r &= r - 1) {
      int v = __builtin_ctz(r);
      if (__builtin_popcount(filled(gone, v)) <= 3 && solve(gone | (1u << v))) return true;
    }
    dead.insert(gone);
    return false;
  };
  return solve(0);
}

/// Minor containment by exhaustive contraction (a minor is a subgraph of
/// some contraction). Exponential; intended for graphs of <= 10 vertices.
inline bool has_minor(const Graph& g, const Graph& pattern) {
  if (g.size() > 12) fail(errc::budget_exceeded, "minor search budget is 12 vertices");
  std::set<std::vector<Edge>> seen;
  std::function<bool(const Graph&)> go = [&](const Graph& h) -> bool {
    if (h.size() < pattern.size() || h.edge_count() < pattern.edge_count()) return false;
    if (!seen.insert(h.edges()).second) return false;
    if (contains_subgraph(h, pattern)) return true;
    for (auto [u, v] : h.edges()) {
      // contract v into u, relabel vertices above v down by one
      Graph c(h.size() - 1);
      auto id = [&](int x) { return x == v ? (u < v ? u : u - 1) : (x > v ? x - 1 : x); };
      for (auto [a, b] : h.edges()) {
        int ia = id(a), ib = id(b);
        if (ia != ib) c.add_edge(ia, ib);
      }
      if (go(c)) return true;
    }
    return false;
  };
  return go(g);
}

}  // namespace parena
