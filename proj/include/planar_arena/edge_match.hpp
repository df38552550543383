#pragma once

// Edge drawing game: match loop, transcript JSON, replay and verification.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "planar_arena/edge_registry.hpp"
#include "planar_arena/graph_props.hpp"

namespace parena {

inline constexpr const char* kEngineVersion = "0.1.0";

using json = nlohmann::ordered_json;

struct EdgeMatchConfig {
  int n = 8;
  BiasSchedule bias = BiasSchedule::ratio(1, 1);
  std::string builder = "random";
  std::string spoiler = "random";
  std::uint64_t seed = 1;
  int nominated = 0;
  bool strict = false;
};

// --- JSON for the small value types -----------------------------------------

inline json to_json(const BiasSchedule& b) {
  return {{"builder", b.builder_per_round}, {"spoiler", b.spoiler_per_round},
          {"first", to_string(b.first)}, {"epsilon", b.epsilon}};
}

inline BiasSchedule bias_from_json(const json& j) {
  BiasSchedule b = j.at("epsilon").get<double>() > 0
                       ? BiasSchedule::one_plus_epsilon(j.at("epsilon").get<double>())
                       : BiasSchedule::ratio(j.at("builder").get<int>(), j.at("spoiler").get<int>());
  b.first = player_from_string(j.at("first").get<std::string>());
  return b;
}

inline json to_json(const DrawMove& m) {
  return {{"u", m.u},
          {"v", m.v},
          {"region", m.region},
          {"corner_u", m.corner_u},
          {"corner_v", m.corner_v},
          {"left", m.left},
          {"right", m.right},
          {"outer_side", m.outer_side}};
}

inline DrawMove draw_move_from_json(const json& j) {
  DrawMove m;
  m.u = j.at("u").get<int>();
  m.v = j.at("v").get<int>();
  m.region = j.value("region", kGlobalRegion);
  m.corner_u = j.value("corner_u", 0);
  m.corner_v = j.value("corner_v", 0);
  m.left = j.value("left", std::vector<int>{});
  m.right = j.value("right", std::vector<int>{});
  m.outer_side = j.value("outer_side", -1);
  return m;
}

inline json to_json(const Slot& s) {
  return {{"u", s.u}, {"v", s.v}, {"region", s.region}, {"corner_u", s.corner_u}, {"corner_v", s.corner_v}};
}

// --- Verdicts ----------------------------------------------------------------

/// Property checks on a finished (or aborted) edge game. `separator` is the
/// vertex set a Spoiler ledger tracked, when there is one.
inline json edge_verdict(const PlaneState& s, int nominated, const std::optional<std::vector<int>>& separator) {
  const Graph g = s.graph();
  json v;
  v["edges"] = s.edge_count();
  v["triangulation"] = s.is_triangulation();
  v["euler"] = s.euler_holds();
  v["builder_degree"] = {{"vertex", nominated}, {"degree", s.builder_subgraph().degree(nominated)}};
  auto d = diameter(g);
  v["diameter"] = d ? json(*d) : json(nullptr);
  v["hamiltonian"] = s.n() <= kHamiltonBudget ? json(is_hamiltonian(g)) : json(nullptr);
  v["apollonian"] = is_apollonian(g);
  v["partial_3tree"] = s.n() <= kPartial3TreeBudget ? json(is_partial_3tree(g)) : json(nullptr);
  if (separator) {
    int comps = components_without(g, *separator);
    v["separator"] = {{"set", *separator},
                      {"components", comps},
                      {"certified", comps > static_cast<int>(separator->size())}};
  }
  return v;
}

/// The rotation system (ccw neighbour lists) plus residency: equal
/// fingerprints mean the same plane state.
inline json edge_fingerprint(const PlaneState& s) {
  json rot = json::array(), where = json::array();
  for (int v = 0; v < s.n(); ++v) {
    json ring = json::array();
    for (int d : s.rotation(v)) ring.push_back(s.head(d));
    rot.push_back(std::move(ring));
    where.push_back(s.container_face(s.component_of(v)));
  }
  return {{"rotation", std::move(rot)}, {"container", std::move(where)}};
}

// --- Match loop ----------------------------------------------------------------

/// Called after every applied move.
using EdgeObserver = std::function<void(const PlaneState&, const History&)>;

struct EdgeMatch {
  PlaneState state;
  History history;
  json transcript;
  bool aborted = false;
};

inline json edge_header(const EdgeMatchConfig& c) {
  return {{"format", "planar-arena-transcript"},
          {"engine_version", kEngineVersion},
          {"game", "edge"},
          {"n", c.n},
          {"bias", to_json(c.bias)},
          {"builder", {{"strategy", c.builder}, {"seed", c.seed}}},
          {"spoiler", {{"strategy", c.spoiler}, {"seed", c.seed + 1}}},
          {"nominated", c.nominated}};
}

inline json move_entry(std::size_t ply, Player p, const DrawMove& m) {
  // Plies double as the logical clock, keeping transcripts byte-identical.
  return {{"ply", ply}, {"player", to_string(p)}, {"move", to_json(m)}};
}

inline EdgeMatch run_edge_match(const EdgeMatchConfig& c, const EdgeObserver& observe = {}) {
  auto builder = make_edge_strategy(c.builder, c.seed, c.nominated);
  auto spoiler = make_edge_strategy(c.spoiler, c.seed + 1, c.nominated);
  builder->strict = spoiler->strict = c.strict;
  EdgeMatch out{PlaneState(c.n, c.bias), {}, edge_header(c), false};
  json moves = json::array();
  while (!out.state.is_complete()) {
    Player p = out.state.turn().to_move;
    EdgeStrategy& who = p == Player::builder ? *builder : *spoiler;
    try {
      DrawMove m = who.next(out.state, out.history);
      out.state.apply_move(m, p);
      moves.push_back(move_entry(out.history.size(), p, m));
      out.history.push_back({p, m});
    } catch (const arena_error& e) {
      out.aborted = true;
      out.transcript["abort"] = {{"ply", out.history.size()}, {"player", to_string(p)}, {"code", e.code()},
                                 {"detail", e.what()}};
      break;
    }
    if (observe) observe(out.state, out.history);
  }
  out.transcript["moves"] = std::move(moves);
  out.transcript["status"] = out.aborted ? "aborted" : "complete";
  out.transcript["fallbacks"] = {{"builder", builder->fallbacks}, {"spoiler", spoiler->fallbacks}};
  std::optional<std::vector<int>> separator;
  if (auto* ham13 = dynamic_cast<SpoilerHam13*>(spoiler.get())) separator = ham13->ledger().tracked;
  out.transcript["verdict"] = edge_verdict(out.state, c.nominated, separator);
  out.transcript["final"] = edge_fingerprint(out.state);
  return out;
}

// --- Replay and verification ----------------------------------------------

/// Replays the first `plies` moves (all when negative). Throws on illegal
/// moves, exactly as live play would.
inline PlaneState replay_edge_transcript(const json& t, long plies = -1) {
  if (t.value("game", "") != "edge") fail(errc::malformed, "not an edge-game transcript");
  PlaneState s(t.at("n").get<int>(), bias_from_json(t.at("bias")));
  long k = 0;
  for (const auto& e : t.at("moves")) {
    if (plies >= 0 && k++ >= plies) break;
    s.apply_move(draw_move_from_json(e.at("move")), player_from_string(e.at("player").get<std::string>()));
  }
  return s;
}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
  json verdict;
};

inline VerifyReport verify_edge_transcript(const json& t) {
  VerifyReport r;
  auto problem = [&](std::string what) {
    r.ok = false;
    r.problems.push_back(std::move(what));
  };
  PlaneState s(3, BiasSchedule{});
  try {
    s = replay_edge_transcript(t);
  } catch (const arena_error& e) {
    problem(std::string("replay diverged: ") + e.what());
    return r;
  } catch (const json::exception& e) {
    fail(errc::malformed, e.what());
  }
  const bool complete = t.value("status", "") == "complete";
  if (complete && !s.is_complete()) problem("transcript claims completion but replay stops at " +
                                            std::to_string(s.edge_count()) + " edges");
  if (t.contains("final") && edge_fingerprint(s) != t["final"]) problem("replay diverged: final plane state differs");
  std::optional<std::vector<int>> separator;
  const json& recorded = t.at("verdict");
  if (recorded.contains("separator")) separator = recorded["separator"]["set"].get<std::vector<int>>();
  r.verdict = edge_verdict(s, t.value("nominated", 0), separator);
  if (r.verdict != recorded) problem("verdict mismatch: recorded " + recorded.dump() + ", recomputed " + r.verdict.dump());
  return r;
}

}  // namespace parena
