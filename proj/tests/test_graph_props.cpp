#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "planar_arena/graph_props.hpp"

using namespace parena;
namespace fx = parena::fixtures;

namespace {

bool brute_hamiltonian(const Graph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.size()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.size() && ok; ++i) ok = g.has_edge(p[i], p[(i + 1) % g.size()]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Random Apollonian network: start from K3 and stack into random faces.
Graph random_apollonian(int n, std::mt19937_64& rng, std::vector<std::array<int, 3>>* faces_out = nullptr) {
  Graph g(n, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};  // the outer face 0,1,2 is never stacked into
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    auto i = pick(rng);
    auto f = faces[i];
    for (int x : f) g.add_edge(v, x);
    faces[i] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[0], f[2], v});
  }
  if (faces_out) *faces_out = faces;
  return g;
}

}  // namespace

TEST(Hamiltonicity, SmallFixtures) {
  EXPECT_TRUE(is_hamiltonian(fx::complete(4)));
  EXPECT_TRUE(is_hamiltonian(fx::octahedron()));
  EXPECT_FALSE(is_hamiltonian(fx::star(3)));
  EXPECT_THROW(is_hamiltonian(Graph(25)), arena_error);
}

TEST(Hamiltonicity, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 6;
    auto g = random_graph(n, 0.5, rng);
    EXPECT_EQ(is_hamiltonian(g), brute_hamiltonian(g)) << trial;
  }
}

TEST(Hamiltonicity, Paths) {
  EXPECT_TRUE(hamiltonian_path(fx::path(3), 0, 2));
  EXPECT_TRUE(hamiltonian_path(fx::complete(3), 0, 1, 2));
  EXPECT_FALSE(hamiltonian_path(Graph(4, {{0, 1}, {2, 3}}), 0, 3));
  EXPECT_THROW(hamiltonian_path(fx::path(3), 1, 1), arena_error);
  EXPECT_THROW(hamiltonian_path(fx::path(3), 0, 2, 2), arena_error);
}

TEST(Hamiltonicity, StronglyHamiltonian) {
  EXPECT_TRUE(is_strongly_hamiltonian(fx::complete(3), {0, 1, 2}));
  EXPECT_TRUE(is_strongly_hamiltonian(fx::complete(4), {0, 1, 2}));
  EXPECT_TRUE(is_strongly_hamiltonian(fx::complete(4), {1, 3, 2}));
  // triangle 0,1,2 with vertex 3 hanging off 0
  Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_FALSE(is_strongly_hamiltonian(pendant, {0, 1, 2}));
}

TEST(Diameter, Basics) {
  EXPECT_EQ(diameter(fx::complete(4)), 1);
  EXPECT_EQ(diameter(fx::path(5)), 4);
  EXPECT_EQ(diameter(Graph(4, {{0, 1}, {2, 3}})), std::nullopt);
}

TEST(Subgraph, Basics) {
  EXPECT_TRUE(contains_subgraph(fx::complete(4), fx::complete(3)));
  EXPECT_FALSE(contains_subgraph(fx::octahedron(), fx::complete(4)));
  EXPECT_TRUE(contains_subgraph(fx::contact_figure(), fx::contact_figure()));
  EXPECT_TRUE(contains_subgraph(fx::triangulation6_apollonian(), fx::complete(4)));
  EXPECT_THROW(contains_subgraph(fx::complete(11), fx::complete(11)), arena_error);
}

TEST(Separator, Basics) {
  EXPECT_TRUE(separator_witness_nonhamiltonian(fx::star(3), {0}));
  for (int v = 0; v < 5; ++v) EXPECT_FALSE(separator_witness_nonhamiltonian(fx::cycle(5), {v}));
}

TEST(Separator, ImpliesNonHamiltonian) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(7, 0.45, rng);
    std::vector<int> s;
    for (int v = 0; v < 7; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    if (s.empty() || static_cast<int>(s.size()) == 7) continue;
    if (separator_witness_nonhamiltonian(g, s)) {
      EXPECT_FALSE(is_hamiltonian(g));
    }
  }
}

TEST(Apollonian, Recognizer) {
  EXPECT_TRUE(is_apollonian(fx::complete(3)));
  EXPECT_TRUE(is_apollonian(fx::complete(4)));
  EXPECT_TRUE(is_apollonian(fx::triangulation6_apollonian()));
  EXPECT_FALSE(is_apollonian(fx::octahedron()));
  EXPECT_FALSE(is_apollonian(fx::complete(5)));
  // the unique 5-vertex triangulation (K5 minus an edge)
  Graph t5 = fx::complete(5);
  Graph k5e(5);
  for (auto [u, v] : t5.edges())
    if (!(u == 3 && v == 4)) k5e.add_edge(u, v);
  EXPECT_TRUE(is_apollonian(k5e));
  EXPECT_TRUE(is_hamiltonian(k5e));
}

TEST(Apollonian, RandomStackingAccepted) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_apollonian(4 + trial % 20, rng);
    EXPECT_TRUE(is_apollonian(g));
    EXPECT_TRUE(is_partial_3tree(g));
  }
}

TEST(Apollonian, FaceSplicingClosed) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::array<int, 3>> faces;
    auto a = random_apollonian(7, rng, &faces);
    auto b = random_apollonian(6, rng);
    auto f = faces[rng() % faces.size()];
    // b's outer triangle 0,1,2 is glued onto face f of a
    Graph g(7 + 3);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    std::vector<int> map{f[0], f[1], f[2], 7, 8, 9};
    for (auto [u, v] : b.edges()) g.add_edge(map[u], map[v]);
    EXPECT_TRUE(is_apollonian(g)) << trial;
  }
}

TEST(Partial3Tree, AgreesWithMinorSearch) {
  EXPECT_FALSE(is_partial_3tree(fx::pentagonal_prism()));
  EXPECT_FALSE(is_partial_3tree(fx::octahedron()));
  EXPECT_FALSE(is_partial_3tree(fx::complete(5)));
  EXPECT_FALSE(is_partial_3tree(fx::k33()));
  EXPECT_TRUE(is_partial_3tree(fx::complete(4)));
  std::vector<Graph> forbidden{fx::complete(5), fx::k33(), fx::octahedron()};
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + trial % 4;
    auto g = random_graph(n, 0.55, rng);
    bool minor = false;
    for (const auto& h : forbidden) minor = minor || has_minor(g, h);
    if (n >= 10) minor = minor || has_minor(g, fx::pentagonal_prism());
    EXPECT_EQ(is_partial_3tree(g), !minor) << trial;
  }
}

TEST(Partial3Tree, PrismNeedsTenVertices) {
  EXPECT_TRUE(has_minor(fx::pentagonal_prism(), fx::pentagonal_prism()));
  EXPECT_FALSE(has_minor(fx::pentagonal_prism(), fx::octahedron()));
  EXPECT_THROW(is_partial_3tree(Graph(31)), arena_error);
}
