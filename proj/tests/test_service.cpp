#include <gtest/gtest.h>

#include <thread>

#include "planar_arena/http_server.hpp"

using namespace parena;

namespace {

json body_of(const Response& r) { return json::parse(r.body); }

std::string create(ArenaService& s, const json& req) {
  Response r = s.handle("POST", "/games", req.dump());
  EXPECT_EQ(r.status, 201) << r.body;
  return body_of(r)["id"].get<std::string>();
}

}  // namespace

TEST(Service, HumanSpoilerPlaysAFullEdgeGame) {
  ArenaService s;
  const std::string id = create(s, {{"kind", "edge"}, {"n", 8}, {"bias", "2:1"}, {"engine", "builder-ham21"}});
  int moves = 0;
  while (true) {
    json state = body_of(s.handle("GET", "/games/" + id, ""));
    if (state["over"].get<bool>()) break;
    ASSERT_EQ(state["to_move"], "spoiler");
    json slots = body_of(s.handle("GET", "/games/" + id + "/slots", ""));
    ASSERT_FALSE(slots.empty());
    Response r = s.handle("POST", "/games/" + id + "/moves", slots[moves % slots.size()].dump());
    ASSERT_EQ(r.status, 200) << r.body;
    ++moves;
  }
  json t = body_of(s.handle("GET", "/games/" + id + "/transcript", ""));
  EXPECT_EQ(t["status"], "complete");
  EXPECT_EQ(t["spoiler"]["strategy"], "human");
  VerifyReport v = verify_transcript(t);
  EXPECT_TRUE(v.ok) << (v.problems.empty() ? "" : v.problems[0]);
  EXPECT_TRUE(v.verdict["hamiltonian"].get<bool>());
  EXPECT_EQ(v.verdict["edges"], 18);
}

TEST(Service, RejectionsCarryCodes) {
  ArenaService s;
  const std::string id = create(s, {{"kind", "edge"}, {"n", 6}, {"engine", "random"}, {"human", "builder"}});
  Response first = s.handle("POST", "/games/" + id + "/moves", R"({"u":0,"v":1})");
  ASSERT_EQ(first.status, 200) << first.body;
  // The engine replied, so it is the human's turn again.
  Response dup = s.handle("POST", "/games/" + id + "/moves", R"({"u":0,"v":1})");
  EXPECT_EQ(dup.status, 422);
  EXPECT_EQ(body_of(dup)["error"], "duplicate-edge");

  Response garbled = s.handle("POST", "/games/" + id + "/moves", "{not json");
  EXPECT_EQ(garbled.status, 400);
  EXPECT_EQ(body_of(garbled)["error"], "malformed");

  EXPECT_EQ(s.handle("GET", "/games/g999", "").status, 404);
  EXPECT_EQ(s.handle("GET", "/elsewhere", "").status, 404);
  EXPECT_EQ(s.handle("POST", "/games", R"({"kind":"chess"})").status, 400);
  EXPECT_EQ(s.handle("POST", "/games", R"({"kind":"edge","engine":"nope"})").status, 400);
}

TEST(Service, MovesAfterTheEndAreAConflict) {
  ArenaService s;
  const std::string id =
      create(s, {{"kind", "packing"}, {"engine", "random-circle"}, {"human", "spoiler"}, {"budget", 3}});
  // Far-off circles until the three-move budget runs out.
  for (int i = 0; i < 3; ++i) {
    json probe = body_of(s.handle("GET", "/games/" + id, ""));
    if (probe["over"].get<bool>()) break;
    Response r = s.handle("POST", "/games/" + id + "/moves",
                          json{{"x", 1000.0 + 10 * i}, {"y", 0.0}, {"r", 1.0}}.dump());
    ASSERT_EQ(r.status, 200) << r.body;
  }
  json state = body_of(s.handle("GET", "/games/" + id, ""));
  EXPECT_TRUE(state["over"].get<bool>());
  Response late = s.handle("POST", "/games/" + id + "/moves", R"({"x":2000,"y":0,"r":1})");
  EXPECT_EQ(late.status, 409);
}

TEST(Service, PackingProbe) {
  ArenaService s;
  const std::string id = create(s, {{"kind", "packing"}, {"engine", "builder-apollonian"}, {"human", "spoiler"},
                                    {"first", "spoiler"}, {"target_n", 6}});
  Response r = s.handle("POST", "/games/" + id + "/moves", R"({"x":0,"y":0,"r":1})");
  ASSERT_EQ(r.status, 200) << r.body;
  json bad = body_of(s.handle("POST", "/games/" + id + "/probe", R"({"x":0.5,"y":0,"r":1})"));
  EXPECT_FALSE(bad["fits"].get<bool>());
  EXPECT_EQ(bad["blocker"]["circle"], 0);
  json touching = body_of(s.handle("POST", "/games/" + id + "/probe", R"({"x":0,"y":-2,"r":1})"));
  EXPECT_TRUE(touching["touches"].size() >= 1u);
}

TEST(Service, OverSockets) {
  ArenaService s;
  httplib::Server server;
  install_routes(server, s);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);
  auto made = client.Post("/games", R"({"kind":"edge","n":6,"engine":"builder-ham21"})", "application/json");
  ASSERT_TRUE(made);
  EXPECT_EQ(made->status, 201);
  const std::string id = json::parse(made->body)["id"];
  auto svg = client.Get("/games/" + id + "/svg");
  ASSERT_TRUE(svg);
  EXPECT_EQ(svg->get_header_value("Content-Type"), "image/svg+xml");
  EXPECT_NE(svg->body.find("<svg"), std::string::npos);
  auto missing = client.Get("/games/nope");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  server.stop();
  t.join();
  EXPECT_EQ(s.game_count(), 1u);
}
