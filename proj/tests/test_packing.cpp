#include <gtest/gtest.h>

#include <cmath>

#include "planar_arena/box_game.hpp"
#include "planar_arena/layout.hpp"
#include "planar_arena/oracles.hpp"
#include "planar_arena/packing_match.hpp"

using namespace parena;

namespace {

const double kRoot3 = std::sqrt(3.0);

// Three mutually tangent unit circles.
std::array<Circle, 3> unit_triple() { return {Circle{{0, 0}, 1}, Circle{{2, 0}, 1}, Circle{{1, kRoot3}, 1}}; }

// Unit circle at the origin with k unit neighbours around it.
Packing flower(int k) {
  Packing p;
  p.add({{0, 0}, 1});
  for (int i = 0; i < k; ++i) p.add({polar(2 * std::numbers::pi * i / 6) * 2, 1});
  return p;
}

}  // namespace

// --- Geometry ------------------------------------------------------------------

TEST(Circles, TangencyAndOverlap) {
  Circle a{{0, 0}, 1}, b{{2, 0}, 1}, c{{1.5, 0}, 1};
  EXPECT_TRUE(tangent(a, b));
  EXPECT_FALSE(overlapping(a, b));
  EXPECT_TRUE(overlapping(a, c));
  Packing p;
  p.add(a);
  p.add(c);
  auto v = validate_packing(p);
  ASSERT_TRUE(v.has_value());
  EXPECT_NEAR(v->depth, 0.5, 1e-12);
}

TEST(Soddy, UnitTriple) {
  auto [a, b, c] = unit_triple();
  SoddyPair s = soddy_circles(a, b, c);
  EXPECT_NEAR(s.inner.r, 1 / (3 + 2 * kRoot3), 1e-12);
  EXPECT_NEAR(s.inner.c.x, 1, 1e-12);
  EXPECT_NEAR(s.inner.c.y, kRoot3 / 3, 1e-12);
  ASSERT_TRUE(s.outer.has_value());
  EXPECT_TRUE(s.outer_encloses);
  EXPECT_NEAR(s.outer->r, 1 / (2 * kRoot3 - 3), 1e-9);
  EXPECT_LE(tangency_residual(*s.outer, {a, b, c}, -1), 1e-9);
}

TEST(Soddy, RejectsNonTangentInputs) {
  Circle a{{0, 0}, 1}, b{{3, 0}, 1}, c{{1, 2}, 1};
  try {
    soddy_circles(a, b, c);
    FAIL();
  } catch (const arena_error& e) {
    EXPECT_EQ(e.code(), errc::invalid_configuration);
  }
}

TEST(Soddy, TwoCirclesOnALineHaveNoOuterCircle) {
  // Curvatures 1, 1, 4: the second Descartes solution has curvature 0.
  Circle a{{-1, 0}, 1}, b{{1, 0}, 1}, c{{0, 0.75}, 0.25};
  SoddyPair s = soddy_circles(a, b, c);
  EXPECT_FALSE(s.outer.has_value());
  EXPECT_NEAR(1 / s.inner.r, 1 + 1 + 4 + 2 * std::sqrt(1 + 4 + 4.0), 1e-9);
}

TEST(Soddy, DescartesInequalityInsideInterstices) {
  auto [a, b, c] = unit_triple();
  Circle in = soddy_circles(a, b, c).inner;
  Circle deeper = soddy_circles(a, b, in).inner;
  EXPECT_GT(1 / in.r, 3.0);
  EXPECT_GT(1 / deeper.r, 1 / a.r + 1 / b.r + 1 / in.r);
}

TEST(Width, ChainNeedsAtLeastD) {
  for (int d : {2, 5, 8}) {
    WidthParams w = width_params(1, 0.5, d);
    EXPECT_TRUE(width_params_hold(1, 0.5, w));
    EXPECT_GE(width_chain_count(1, 0.5, w.epsilon, w.x0), d);
  }
  EXPECT_LT(width(1, 1, 8), width(1, 1, 2));
  EXPECT_THROW(width(0, 1, 3), arena_error);
}

TEST(Surround, FullFlowerIsInner) {
  Packing six = flower(6);
  auto ring = surrounds(six, 0);
  ASSERT_TRUE(ring.has_value());
  EXPECT_EQ(ring->size(), 6u);
  EXPECT_FALSE(is_inner(flower(5), 0));
}

TEST(Gaps, GammaBlockerStaysOffOmega) {
  Packing p = flower(3);
  GammaBlock g = gamma_block(p, 0, 4);
  EXPECT_TRUE(p.fits(g.circle));
  EXPECT_GT(dist(g.circle, p[0]), 0);
  EXPECT_LE(dist(g.circle, p[0]), width(1, g.circle.r, 4) + 1e-12);
  EXPECT_THROW(gamma_block(flower(6), 0, 4), arena_error);
}

TEST(Gaps, NoGapPointsOnceSurrounded) {
  EXPECT_TRUE(gap_points(flower(6), 0).empty());
  EXPECT_FALSE(gap_points(flower(2), 0).empty());
}

TEST(Layout, RealizesFixtures) {
  for (const Graph& h : {fixtures::complete(4), fixtures::octahedron(), fixtures::pentagonal_prism()}) {
    LayoutReport r = layout_packing_report(h);
    EXPECT_FALSE(validate_packing(r.packing).has_value());
    EXPECT_TRUE(contains_subgraph(contact_graph(r.packing), h));
    EXPECT_LE(r.residual, 1e-9);
  }
  EXPECT_THROW(layout_packing(fixtures::k33()), arena_error);
}

// --- Game --------------------------------------------------------------------

TEST(PackingGame, TurnsAndLegality) {
  PackingGame g;
  g.apply({{0, 0}, 1}, Player::builder);
  try {
    g.apply({{5, 0}, 1}, Player::builder);
    FAIL();
  } catch (const arena_error& e) {
    EXPECT_EQ(e.code(), errc::wrong_turn);
  }
  EXPECT_THROW(g.apply({{1, 0}, 1}, Player::spoiler), arena_error);
  EXPECT_THROW(g.apply({{5, 0}, -1}, Player::spoiler), arena_error);
  g.apply({{2, 0}, 1}, Player::spoiler);
  EXPECT_EQ(g.neighbors(0), std::vector<int>{1});
  EXPECT_EQ(g.moves_by(Player::builder), 1);
}

TEST(PackingGame, DetachedCircleIsClear) {
  Packing p = flower(6);
  Circle c = detached_circle(p);
  EXPECT_TRUE(p.fits(c));
  EXPECT_GT(p.clearance(c.c) - c.r, 10.0);
}

// --- Box game ----------------------------------------------------------------

TEST(BoxGame, ThresholdBoardsAreWon) {
  for (auto [n, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}})
    EXPECT_TRUE(maker_always_wins(static_cast<int>(box_threshold(n, q)), n, q)) << n << "," << q;
}

TEST(BoxGame, TooFewBoxesLose) { EXPECT_FALSE(maker_always_wins(1, 3, 1)); }

TEST(BoxGame, LevelByLevel) {
  BoxGameState b(4, 3, 1);
  // Level 0 wants (q+1)^2 = 4 marked boxes.
  b.maker = {1, 1, 1, 0};
  EXPECT_EQ(box_maker_move(b), 3);
  // Level 1 wants 2 doubly marked boxes; box 0 is dead.
  b.maker = {1, 2, 1, 1};
  b.breaker = {1, 0, 0, 0};
  EXPECT_EQ(box_maker_move(b), 2);
}

// --- Strategies ----------------------------------------------------------------

TEST(BuilderBox, FindsK4AndVerifies) {
  PackingMatchConfig c;
  c.builder = "builder-box";
  c.spoiler = "greedy-circle-blocker";
  c.target = {"k4", 10, 1};
  c.budget = 1000;
  auto m = run_packing_match(c);
  EXPECT_EQ(m.status, "h-found");
  EXPECT_TRUE(m.transcript["verdict"]["h_found"].get<bool>());
  EXPECT_TRUE(verify_transcript(json::parse(m.transcript.dump())).ok);
}

TEST(BuilderBox, NeedsTargetAndBias) {
  EXPECT_THROW(make_packing_strategy("builder-box", 1, {"", 10, 1}), arena_error);
  EXPECT_THROW(make_packing_strategy("builder-box", 1, {"k4", 10, 0}), arena_error);
}

TEST(BuilderApollonian, WinningPositionIsCertified) {
  PackingGame g;
  BuilderApollonian b(8);
  RandomCircle s(3);
  while (b.winning_move() < 0) {
    Player p = g.turn().to_move;
    g.apply(p == Player::builder ? b.next(g) : s.next(g), p);
  }
  // Checked right after the winning Builder move, before Spoiler replies.
  const Packing& p = g.packing();
  WinningWitness w = b.witness();
  w.omega = g.last_by(Player::builder);
  EXPECT_TRUE(b.certified());
  EXPECT_TRUE(is_winning_position(p, w));

  WinningWitness tight = w;
  tight.constants.x0 /= 10;
  EXPECT_FALSE(is_winning_position(p, tight));

  // A circle inside one of the threatened faces spoils the position.
  auto threats = detail::threat_circles(p[w.omega1], p[w.omega2], p[w.omega]);
  ASSERT_TRUE(threats[0].has_value());
  Packing filled = p;
  filled.add(soddy_circles(p[w.omega1], p[w.omega], *threats[0]).inner, Player::spoiler);
  EXPECT_FALSE(is_winning_position(filled, w));

  WinningWitness bogus = w;
  bogus.omega = p.size();
  EXPECT_THROW(is_winning_position(p, bogus), arena_error);
}

TEST(BuilderApollonian, GrowsNetworkAgainstGreedy) {
  PackingMatchConfig c;
  c.builder = "builder-apollonian";
  c.spoiler = "greedy-circle-blocker";
  c.target.target_n = 12;
  auto m = run_packing_match(c);
  EXPECT_EQ(m.status, "builder-finished");
  const json& v = m.transcript["verdict"];
  EXPECT_TRUE(v["network"]["apollonian"].get<bool>());
  EXPECT_GE(v["network"]["size"].get<int>(), 12);
  EXPECT_TRUE(v["k4"]["present"].get<bool>());
}

TEST(SpoilerGamma, KeepsAWidthGapToBuilder) {
  PackingGame g;
  SpoilerGamma s(3);
  g.apply({{0, 0}, 1}, Player::builder);
  Circle c = s.next(g);
  g.apply(c, Player::spoiler);
  EXPECT_GT(dist(c, g.packing()[0]), 0);
  EXPECT_EQ(s.fallbacks, 0);
}

// --- Transcripts ------------------------------------------------------------------

TEST(PackingMatch, RandomGamesVerify) {
  for (std::uint64_t seed : {1, 2, 3}) {
    PackingMatchConfig c;
    c.seed = seed;
    auto m = run_packing_match(c);
    EXPECT_EQ(m.status, "budget");
    EXPECT_EQ(m.game.moves(), 2 * kPackingBudget);
    auto r = verify_transcript(json::parse(m.transcript.dump()));
    EXPECT_TRUE(r.ok) << (r.problems.empty() ? "" : r.problems[0]);
  }
}

TEST(PackingMatch, NudgedCircleIsReported) {
  PackingMatchConfig c;
  c.spoiler = "greedy-circle-blocker";
  auto m = run_packing_match(c);
  json t = json::parse(m.transcript.dump());
  // Push a Spoiler circle onto its tangent neighbour.
  int i = -1, j = -1;
  for (int k = 0; k < m.game.moves() && i < 0; ++k)
    for (int nb : m.game.neighbors(k))
      if (nb < k) {
        i = k;
        j = nb;
        break;
      }
  ASSERT_GE(i, 0);
  const Circle a = m.game.packing()[i], b = m.game.packing()[j];
  Point towards = (b.c - a.c) * (0.1 * a.r / (b.c - a.c).norm());
  t["moves"][i]["circle"]["x"] = a.c.x + towards.x;
  t["moves"][i]["circle"]["y"] = a.c.y + towards.y;
  auto r = verify_transcript(t);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.problems.empty());
  EXPECT_NE(r.problems[0].find("validity violation"), std::string::npos);
}

TEST(PackingMatch, UnknownNamesAreRejected) {
  EXPECT_THROW(make_packing_strategy("nope", 1, {}), arena_error);
  EXPECT_THROW(named_graph("k5"), arena_error);
  EXPECT_THROW(verify_transcript(json{{"game", "chess"}}), arena_error);
}
