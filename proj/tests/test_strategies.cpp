#include <gtest/gtest.h>

#include "planar_arena/edge_match.hpp"
#include "planar_arena/eventually.hpp"

using namespace parena;

namespace {

DrawMove join(int u, int v, int region = kGlobalRegion) { return {u, v, region, 0, 0, {}, {}, -1}; }

struct Game {
  PlaneState s;
  History h;
  Game(int n, BiasSchedule b) : s(n, b) {}
  void play(const DrawMove& m) {
    Player p = s.turn().to_move;
    s.apply_move(m, p);
    h.push_back({p, m});
  }
  // Asks `strat` for every move it owes this turn.
  std::vector<DrawMove> reply(EdgeStrategy& strat) {
    std::vector<DrawMove> out;
    Player p = s.turn().to_move;
    while (!s.is_complete() && s.turn().to_move == p) {
      out.push_back(strat.next(s, h));
      play(out.back());
    }
    return out;
  }
};

// Closes a cycle with every resident kept in the outer face.
DrawMove close(const PlaneState& s, int u, int v) { return make_move(s, slots_for(s, u, v).front(), 1); }

Edge edge_of(const DrawMove& m) { return {std::min(m.u, m.v), std::max(m.u, m.v)}; }

}  // namespace

TEST(Registry, EveryNameBuilds) {
  for (const auto& name : edge_strategy_names()) EXPECT_EQ(make_edge_strategy(name, 1)->name(), name);
  EXPECT_THROW(make_edge_strategy("nope", 1), arena_error);
  EXPECT_EQ(edge_strategy_side("builder-ham21"), Player::builder);
  EXPECT_EQ(edge_strategy_side("spoiler-p3t"), Player::spoiler);
  EXPECT_FALSE(edge_strategy_side("random").has_value());
}

TEST(BuilderHam21, OpensWithPath) {
  Game g(8, BiasSchedule::ratio(2, 1));
  BuilderHam21 b;
  auto moves = g.reply(b);
  ASSERT_EQ(moves.size(), 2u);
  auto e1 = edge_of(moves[0]), e2 = edge_of(moves[1]);
  std::set<int> ends{e1.first, e1.second, e2.first, e2.second};
  EXPECT_EQ(ends.size(), 3u);  // two edges sharing a vertex
}

TEST(BuilderHam21, AnswersIsolatedPairWithTriangle) {
  Game g(8, BiasSchedule::ratio(2, 1));
  BuilderHam21 b;
  g.reply(b);
  g.play(join(5, 6));
  auto moves = g.reply(b);
  ASSERT_EQ(moves.size(), 2u);
  auto e1 = edge_of(moves[0]);
  // {5, x} and {6, x} for one isolated x
  int x = e1.first == 5 || e1.first == 6 ? e1.second : e1.first;
  EXPECT_TRUE(g.s.has_edge(5, x) && g.s.has_edge(6, x));
  EXPECT_TRUE(triangle_face(g.s, 5, 6, x) >= 0 || outer_walk(g.s, 5).size() == 3);
  EXPECT_EQ(b.fallbacks, 0);
}

TEST(BuilderHam21, AttachesJoinedVertexToTriangle) {
  Game g(8, BiasSchedule::ratio(2, 1));
  BuilderHam21 b;
  g.reply(b);          // 0-1, 0-2
  g.play(close(g.s, 1, 2));  // Spoiler closes the triangle
  g.reply(b);
  // Spoiler joins a fresh isolated vertex to the triangle.
  int x = -1;
  for (int v : isolated_in(g.s, kGlobalRegion)) x = v;
  ASSERT_GE(x, 0);
  g.play(join(x, 0));
  g.reply(b);
  EXPECT_EQ(g.s.degree(x), 3);
  EXPECT_EQ(b.fallbacks, 0);
}

TEST(BuilderHam21, WinsAgainstRandomAndKeepsInvariant) {
  for (int n : {6, 8, 10}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      EdgeMatchConfig c{n, BiasSchedule::ratio(2, 1), "builder-ham21", seed % 2 ? "random" : "greedy-blocker", seed};
      bool invariant = true;
      auto m = run_edge_match(c, [&](const PlaneState& s, const History& h) {
        if (h.back().player != Player::builder || s.turn().to_move == Player::builder || s.is_complete()) return;
        for (int rep : s.components())
          if (outer_triple(s, rep) && !eventually_strongly_hamiltonian(s, rep)) invariant = false;
      });
      EXPECT_EQ(m.transcript["verdict"]["hamiltonian"], true) << n << " " << seed;
      EXPECT_TRUE(invariant) << n << " " << seed;
      EXPECT_EQ(m.transcript["fallbacks"]["builder"], 0);
    }
  }
}

TEST(SpoilerHam13, OpensWithTrappingTriangle) {
  Game g(10, BiasSchedule::ratio(1, 3, Player::spoiler));
  SpoilerHam13 sp;
  g.reply(sp);
  EXPECT_EQ(g.s.edge_count(), 3);
  auto tri = outer_walk(g.s, 0);
  ASSERT_EQ(tri.size(), 3u);
  int face = triangle_face(g.s, tri[0], tri[1], tri[2]);
  ASSERT_GE(face, 0);
  EXPECT_EQ(isolated_in(g.s, face).size(), 1u);
}

TEST(SpoilerHam13, SurroundsBuildersEndpoint) {
  Game g(10, BiasSchedule::ratio(1, 3));
  SpoilerHam13 sp;
  g.play(join(0, 1));
  g.reply(sp);
  // triangle (0, x, y) with 1 inside
  auto tri = outer_walk(g.s, 0);
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_EQ(std::count(tri.begin(), tri.end(), 1), 0);
  EXPECT_EQ(sp.ledger().tracked.size(), 3u);
}

TEST(SpoilerHam13, CertifiesLargeBoards) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EdgeMatchConfig c{30, BiasSchedule::ratio(1, 3), "random", "spoiler-ham13", seed};
    auto m = run_edge_match(c);
    const auto& sep = m.transcript["verdict"]["separator"];
    EXPECT_EQ(sep["certified"], true);
    int k = static_cast<int>(sep["set"].size());
    EXPECT_LE(3 * k - 6, 30);
    EXPECT_GE(3 * k - 4, 30);
  }
}

TEST(BuilderDegree, DefaultMoveJoinsIsolatedVertexToNominee) {
  Game g(12, BiasSchedule::ratio(1, 1));
  BuilderDegree b(0);
  auto m = g.reply(b);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(std::min(m[0].u, m[0].v), 0);
  g.play(join(7, 8));  // elsewhere
  m = g.reply(b);
  EXPECT_TRUE(m[0].u == 0 || m[0].v == 0);
  EXPECT_FALSE(active_faces(g.s, 0).empty());
}

TEST(BuilderDegree, ActiveFaceRecordShape) {
  Game g(10, BiasSchedule::ratio(1, 1));
  BuilderDegree b(0);
  for (int i = 0; i < 6; ++i) {
    g.reply(b);
    RandomEdgePlayer r(static_cast<std::uint64_t>(i));
    g.reply(r);
  }
  for (const auto& rec : active_faces(g.s, 0)) {
    EXPECT_FALSE(rec.isolated.empty());
    for (int y : rec.spokes) EXPECT_TRUE(g.s.has_edge(0, y));
    for (std::size_t i = 0; i < rec.spokes.size(); ++i)
      for (std::size_t j = i + 1; j < rec.spokes.size(); ++j) EXPECT_FALSE(g.s.has_edge(rec.spokes[i], rec.spokes[j]));
  }
}

TEST(BuilderDegree, LinearDegreeSmallDiameter) {
  for (int n : {20, 40}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      EdgeMatchConfig c{n, BiasSchedule::ratio(1, 1), "builder-degree", seed % 2 ? "random" : "greedy-blocker", seed};
      auto v = run_edge_match(c).transcript["verdict"];
      EXPECT_GE(v["builder_degree"]["degree"].get<int>(), 0.3 * n);
      EXPECT_LE(v["diameter"].get<int>(), 6);
    }
  }
}

TEST(SpoilerP3T, MirrorsIsolatedPair) {
  Game g(10, BiasSchedule::ratio(1, 1));
  SpoilerP3T sp;
  g.play(join(0, 1));
  auto m = g.reply(sp);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(g.s.component_vertices(m[0].u).size(), 2u);
  EXPECT_NE(g.s.component_of(m[0].u), g.s.component_of(0));
}

TEST(SpoilerP3T, SurroundsThirdCornerWhenVertexJoinsTriangle) {
  Game g(10, BiasSchedule::ratio(1, 1));
  g.play(join(0, 1));
  g.play(join(1, 2));
  g.play(close(g.s, 0, 2));  // outer face (0, 1, 2), nothing inside
  g.play(join(5, 9));  // Spoiler's move elsewhere
  SpoilerP3T sp;
  g.play(join(3, 0));  // Builder attaches isolated 3 at u = 0
  auto m = g.reply(sp);
  ASSERT_EQ(m.size(), 1u);
  Edge e = edge_of(m[0]);
  EXPECT_TRUE(e == Edge(1, 3) || e == Edge(2, 3));
  EXPECT_EQ(outer_walk(g.s, 0).size(), 3u);  // new outer 3-cycle, third corner surrounded
}

TEST(SpoilerP3T, KeepsComponentsPartial3Trees) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    EdgeMatchConfig c{10, BiasSchedule::ratio(1, 1), seed % 2 ? "random" : "targeted-octahedron", "spoiler-p3t", seed};
    bool ok = true;
    auto m = run_edge_match(c, [&](const PlaneState& s, const History& h) {
      if (h.back().player != Player::spoiler) return;
      const Graph g = s.graph();
      for (int rep : s.components()) ok = ok && is_partial_3tree(g.induced(s.component_vertices(rep)));
    });
    EXPECT_TRUE(ok);
    EXPECT_EQ(m.transcript["verdict"]["apollonian"], true);
    EXPECT_FALSE(contains_subgraph(m.state.graph(), fixtures::octahedron()));
  }
}

TEST(EdgeMatch, DeterministicAndVerifiable) {
  EdgeMatchConfig c{8, BiasSchedule::ratio(2, 1), "builder-ham21", "random", 7};
  auto a = run_edge_match(c), b = run_edge_match(c);
  EXPECT_EQ(a.transcript.dump(), b.transcript.dump());
  EXPECT_TRUE(verify_edge_transcript(a.transcript).ok);
  EXPECT_EQ(replay_edge_transcript(a.transcript).graph(), a.state.graph());
}

TEST(EdgeMatch, TamperedPartitionIsReported) {
  EdgeMatchConfig c{10, BiasSchedule::ratio(1, 1), "random", "random", 3};
  auto t = run_edge_match(c).transcript;
  bool edited = false;
  for (auto& e : t["moves"]) {
    auto& mv = e["move"];
    if (!mv["right"].empty() || !mv["left"].empty()) {
      std::swap(mv["left"], mv["right"]);
      edited = true;
      break;
    }
  }
  ASSERT_TRUE(edited);
  EXPECT_FALSE(verify_edge_transcript(t).ok);
}

TEST(EdgeMatch, StrictModeAbortsWithPly) {
  // A 2:1 Builder strategy dropped into a 1:1 game loses track of its plan.
  EdgeMatchConfig c{9, BiasSchedule::ratio(1, 1), "builder-ham21", "random", 5};
  c.strict = true;
  auto m = run_edge_match(c);
  if (m.aborted) {
    EXPECT_EQ(m.transcript["abort"]["code"], "strategy-confused");
    EXPECT_EQ(m.transcript["status"], "aborted");
  } else {
    EXPECT_EQ(m.transcript["status"], "complete");
  }
}
