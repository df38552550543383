#include <gtest/gtest.h>

#include <regex>

#include "planar_arena/edge_match.hpp"
#include "planar_arena/svg.hpp"

using namespace parena;

namespace {

int count(const std::string& text, const std::string& what) {
  int k = 0;
  for (auto at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++k;
  return k;
}

bool proper_crossing(Point a, Point b, Point c, Point d) {
  auto side = [](Point p, Point q, Point r) { return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x); };
  double d1 = side(c, d, a), d2 = side(c, d, b), d3 = side(a, b, c), d4 = side(a, b, d);
  const double tol = 1e-12;
  return ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol));
}

int crossings(const PlaneState& s) {
  auto at = edge_layout(s);
  int k = 0;
  for (int e = 0; e < s.edge_count(); ++e)
    for (int f = e + 1; f < s.edge_count(); ++f) {
      auto [a, b] = s.edge(e);
      auto [c, d] = s.edge(f);
      if (a == c || a == d || b == c || b == d) continue;
      k += proper_crossing(at[a], at[b], at[c], at[d]);
    }
  return k;
}

}  // namespace

TEST(RenderEdge, EmptyGameDrawsDots) {
  PlaneState s(5, BiasSchedule::ratio(1, 1));
  std::string svg = render_edge_svg(s);
  EXPECT_EQ(count(svg, "class=\"vertex\""), 5);
  EXPECT_EQ(count(svg, "<line"), 0);
}

TEST(RenderEdge, K4WithoutCrossings) {
  EdgeMatchConfig c;
  c.n = 4;
  auto m = run_edge_match(c);
  ASSERT_TRUE(m.state.is_complete());
  EXPECT_EQ(crossings(m.state), 0);
  std::string svg = render_edge_svg(m.state);
  EXPECT_EQ(count(svg, "class=\"edge "), 6);
}

TEST(RenderEdge, RandomGamesStayCrossingFree) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    EdgeMatchConfig c;
    c.n = 5 + static_cast<int>(seed % 8);
    c.seed = seed;
    auto m = run_edge_match(c);
    EXPECT_EQ(crossings(m.state), 0) << "seed " << seed;
    // Halfway positions have nested components.
    PlaneState half = replay_edge_transcript(m.transcript, static_cast<long>(m.history.size() / 2));
    EXPECT_EQ(crossings(half), 0) << "seed " << seed << " halfway";
  }
}

TEST(RenderPacking, ThreeTangentCircles) {
  Packing p;
  p.add({{0, 0}, 1}, Player::builder);
  p.add({{2, 0}, 1}, Player::spoiler);
  p.add({{1, std::sqrt(3.0)}, 1}, Player::builder);
  std::string svg = render_packing_svg(p);
  EXPECT_EQ(count(svg, "class=\"disk builder\""), 2);
  EXPECT_EQ(count(svg, "class=\"disk spoiler\""), 1);
  EXPECT_EQ(count(svg, "class=\"contact\""), 3);
  EXPECT_EQ(count(render_packing_svg(p, false), "class=\"contact\""), 0);
}

TEST(RenderPacking, EmptyPackingIsValidSvg) {
  std::string svg = render_packing_svg(Packing{});
  EXPECT_TRUE(std::regex_search(svg, std::regex("^<svg[^>]*>\\n</svg>\\n$")));
}
