#include <gtest/gtest.h>

#include <random>

#include "planar_arena/plane.hpp"

using namespace parena;

namespace {

DrawMove join(int u, int v, int region = kGlobalRegion) { return {u, v, region, 0, 0, {}, {}, -1}; }

// Triangle a,b,c = 0,1,2 with d = 3 placed inside.
PlaneState triangle_with_inner_vertex() {
  PlaneState s(4, BiasSchedule::ratio(1, 1));
  s.place(join(0, 1), Player::builder);
  s.place(join(1, 2), Player::builder);
  // left face of 0->2 stays outer, vertex 3 goes to the inner (right) face
  DrawMove close{0, 2, kGlobalRegion, 0, 0, {}, {3}, 0};
  s.place(close, Player::builder);
  return s;
}

}  // namespace

TEST(Plane, NewGame) {
  auto s = new_game(3, BiasSchedule::ratio(1, 1));
  EXPECT_EQ(s.move_count(), 0);
  EXPECT_EQ(s.components().size(), 3u);
  EXPECT_EQ(s.legal_edge_slots().size(), 3u);
  EXPECT_FALSE(s.is_complete());
  EXPECT_EQ(new_game(6, BiasSchedule::ratio(2, 1)).total_moves(), 12);
  EXPECT_THROW(new_game(2, BiasSchedule::ratio(1, 1)), arena_error);
}

TEST(Plane, JoinAndDuplicate) {
  auto s = new_game(4, BiasSchedule::ratio(1, 1));
  s.apply_move(join(0, 1), Player::builder);
  EXPECT_EQ(s.component_of(1), 0);
  EXPECT_EQ(s.component_vertices(0).size(), 2u);
  try {
    s.apply_move(join(0, 1), Player::spoiler);
    FAIL();
  } catch (const arena_error& e) {
    EXPECT_EQ(e.code(), errc::duplicate_edge);
  }
  try {
    s.apply_move(join(2, 3), Player::builder);
    FAIL();
  } catch (const arena_error& e) {
    EXPECT_EQ(e.code(), errc::wrong_turn);
  }
}

TEST(Plane, TriangleSurroundsVertex) {
  auto s = triangle_with_inner_vertex();
  EXPECT_TRUE(s.euler_holds());
  int region = s.container_face(3);
  ASSERT_NE(region, kGlobalRegion);
  auto slots = s.legal_edge_slots();
  int inner = 0;
  for (const auto& sl : slots) {
    EXPECT_EQ(sl.region, region);
    EXPECT_EQ(sl.v, 3);
    ++inner;
  }
  EXPECT_EQ(inner, 3);
}

TEST(Plane, PartitionValidation) {
  PlaneState s(4, BiasSchedule::ratio(1, 1));
  s.place(join(0, 1), Player::builder);
  s.place(join(1, 2), Player::builder);
  DrawMove bad{0, 2, kGlobalRegion, 0, 0, {}, {}, 0};
  try {
    s.place(bad, Player::builder);
    FAIL();
  } catch (const arena_error& e) {
    EXPECT_EQ(e.code(), errc::malformed_partition);
  }
  DrawMove twice{0, 2, kGlobalRegion, 0, 0, {3}, {3}, 0};
  EXPECT_THROW(s.place(twice, Player::builder), arena_error);
  DrawMove no_side{0, 2, kGlobalRegion, 0, 0, {3}, {}, -1};
  EXPECT_THROW(s.place(no_side, Player::builder), arena_error);
}

TEST(Plane, BuilderSubgraph) {
  auto s = new_game(3, BiasSchedule::ratio(1, 1));
  EXPECT_EQ(s.builder_subgraph().edge_count(), 0);
  s.apply_move(join(0, 1), Player::builder);
  s.apply_move(join(1, 2), Player::spoiler);
  s.apply_move(make_move(s, s.legal_edge_slots().front()), Player::builder);
  EXPECT_EQ(s.builder_subgraph().degree(0), 2);
  EXPECT_TRUE(s.is_complete());
  EXPECT_TRUE(s.legal_edge_slots().empty());
}

TEST(Plane, RandomPlayEndsInTriangulation) {
  std::mt19937_64 rng(1);
  for (int game = 0; game < 200; ++game) {
    int n = 3 + game % 10;
    PlaneState s(n, BiasSchedule::ratio(1, 1));
    while (!s.is_complete()) {
      auto slots = s.legal_edge_slots();
      ASSERT_FALSE(slots.empty());
      auto slot = slots[rng() % slots.size()];
      DrawMove m = make_move(s, slot);
      m.left.clear();
      m.right.clear();
      for (int r : s.split_residents(slot)) (rng() % 2 ? m.left : m.right).push_back(r);
      if (s.split_needs_outer_side(slot)) m.outer_side = static_cast<int>(rng() % 2);
      int faces_before = static_cast<int>(s.faces().walks.size());
      bool split = s.is_split(slot);
      s.apply_move(m, s.turn().to_move);
      ASSERT_TRUE(s.euler_holds());
      if (split) EXPECT_EQ(static_cast<int>(s.faces().walks.size()), faces_before + 1);
    }
    EXPECT_TRUE(s.is_triangulation()) << game;
    EXPECT_EQ(s.graph().edge_count(), 3 * n - 6);
  }
}
