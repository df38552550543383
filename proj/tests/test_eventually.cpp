#include <gtest/gtest.h>

#include "planar_arena/eventually.hpp"

using namespace parena;

namespace {

DrawMove edge(int u, int v, int cu = 0, int cv = 0, int region = kGlobalRegion) {
  return {u, v, region, cu, cv, {}, {}, -1};
}

// Draws the cycle 0..k-1; isolated vertices k..n-1 end up in the face given
// by `inside`.
PlaneState cycle_state(int n, int k, bool inside) {
  PlaneState s(n, BiasSchedule::ratio(1, 1));
  for (int i = 0; i + 1 < k; ++i) s.place(edge(i, i + 1, 0, 0), Player::builder);
  std::vector<int> rest;
  for (int v = k; v < n; ++v) rest.push_back(v);
  // left of (0 -> k-1) stays outer; the right face is the inner one
  DrawMove close{0, k - 1, kGlobalRegion, 0, 0, inside ? std::vector<int>{} : rest,
                 inside ? rest : std::vector<int>{}, 0};
  s.place(close, Player::builder);
  return s;
}

int count_completions(const PlaneState& s, int rep, EventuallyOptions opts = {}) {
  int calls = 0;
  eventually_satisfies(
      s, rep,
      [&](const Graph&, const std::vector<int>&) {
        ++calls;
        return true;
      },
      opts);
  return calls;
}

}  // namespace

TEST(Eventually, CompleteK4IsHamiltonian) {
  auto s = cycle_state(4, 3, true);
  int region = s.container_face(3);
  for (int v = 0; v < 3; ++v) {
    auto slots = s.legal_edge_slots();
    ASSERT_FALSE(slots.empty());
    s.place(make_move(s, slots.front()), Player::builder);
  }
  EXPECT_NE(region, kGlobalRegion);
  EXPECT_EQ(s.graph().edge_count(), 6);
  EXPECT_TRUE(eventually_satisfies(s, 0, [](const Graph& h, const std::vector<int>&) { return is_hamiltonian(h); }));
  EXPECT_EQ(count_completions(s, 0), 1);
}

TEST(Eventually, TriangleAroundIsolatedVertexOnlyCompletesToK4) {
  auto s = cycle_state(4, 3, true);
  EventuallyOptions with{true};
  EXPECT_TRUE(eventually_satisfies(
      s, 0, [](const Graph& h, const std::vector<int>&) { return h.size() == 4 && h.edge_count() == 6; }, with));
  EXPECT_TRUE(eventually_satisfies(
      s, 0, [](const Graph& h, const std::vector<int>&) { return is_hamiltonian(h); }, with));
  EXPECT_EQ(count_completions(s, 0, with), 1);
  // Without residents the triangle is already its own completion.
  EXPECT_EQ(count_completions(s, 0), 1);
}

TEST(Eventually, PolygonCompletionsAreCatalan) {
  // A k-cycle's inner face has Catalan(k-2) triangulations.
  EXPECT_EQ(count_completions(cycle_state(5, 5, true), 0), 5);
  EXPECT_EQ(count_completions(cycle_state(6, 6, true), 0), 14);
  EXPECT_EQ(count_completions(cycle_state(7, 7, true), 0), 42);
}

TEST(Eventually, VertexJoinedToTwoTriangleCorners) {
  // Triangle 0,1,2 and vertex 3 joined to 0 and 1 so the outer face is (0,1,3).
  int checked = 0;
  for (int side = 0; side < 2; ++side) {
    PlaneState s(4, BiasSchedule::ratio(1, 1));
    s.place(edge(3, 0), Player::builder);
    s.place(edge(0, 1), Player::builder);
    s.place(edge(1, 2), Player::builder);
    s.place({0, 2, kGlobalRegion, 0, 0, {}, {}, 0}, Player::builder);
    for (const auto& sl : s.legal_edge_slots()) {
      if (!((sl.u == 3 && sl.v == 1) || (sl.u == 1 && sl.v == 3))) continue;
      DrawMove m{sl.u, sl.v, sl.region, sl.corner_u, sl.corner_v, {}, {}, side};
      PlaneState t = s;
      t.place(m, Player::builder);
      auto outer = outer_triple(t, 0);
      if (!outer) continue;
      EXPECT_TRUE(eventually_strongly_hamiltonian(t, 0));
      EXPECT_EQ(count_completions(t, 0), 1);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Eventually, PendantInsideTriangle) {
  PlaneState s = cycle_state(4, 3, true);
  int region = s.container_face(3);
  auto corners = s.corners_of(region, 0);
  ASSERT_EQ(corners.size(), 1u);
  s.place({0, 3, region, 0, 0, {}, {}, -1}, Player::builder);
  EXPECT_FALSE(is_strongly_hamiltonian(s.graph(), {0, 1, 2}));
  EXPECT_TRUE(eventually_strongly_hamiltonian(s, 0));
  EXPECT_EQ(count_completions(s, 0), 1);
}

TEST(Eventually, Budget) {
  auto s = cycle_state(11, 11, true);
  EXPECT_THROW(count_completions(s, 0), arena_error);
}
