#pragma once

// Circle packing game: match loop, transcript JSON, replay and verification.

#include "planar_arena/edge_match.hpp"
#include "planar_arena/packing_registry.hpp"

namespace parena {

inline constexpr int kPackingBudget = 50;

struct PackingMatchConfig {
  std::string builder = "random-circle";
  std::string spoiler = "random-circle";
  PackingTarget target;
  Player first = Player::builder;
  std::uint64_t seed = 1;
  int budget = kPackingBudget;  // moves per side
  bool strict = false;

  BiasSchedule bias() const {
    return target.epsilon > 0 ? BiasSchedule::one_plus_epsilon(target.epsilon, first)
                              : BiasSchedule::ratio(1, 1, first);
  }
};

inline json to_json(const Circle& c) { return {{"x", c.c.x}, {"y", c.c.y}, {"r", c.r}}; }

inline Circle circle_from_json(const json& j) {
  return {{j.at("x").get<double>(), j.at("y").get<double>()}, j.at("r").get<double>()};
}

/// The packing JSON schema: circles with owner and move index, plus tau.
inline json to_json(const Packing& p) {
  json cs = json::array();
  for (const auto& it : p.items()) {
    json c = to_json(it.circle);
    c["owner"] = to_string(it.owner);
    c["move_index"] = it.move_index;
    cs.push_back(std::move(c));
  }
  return {{"tau", p.tau}, {"circles", std::move(cs)}};
}

// --- Verdicts ----------------------------------------------------------------

/// Index of `who`'s k-th circle (1-based), or -1.
inline int nth_circle_by(const Packing& p, Player who, int k) {
  for (int i = 0; i < p.size(); ++i)
    if (p.at(i).owner == who && --k == 0) return i;
  return -1;
}

/// Everything here is recomputed from the circles plus the strategy's
/// recorded claims (which circles form its network, when it won).
inline json packing_verdict(const Packing& p, const std::string& h, const json& claims) {
  json v;
  auto bad = validate_packing(p);
  v["valid"] = !bad.has_value();
  if (bad) v["violation"] = {{"i", bad->i}, {"j", bad->j}, {"depth", bad->depth}};
  const Graph g = contact_graph(p);
  v["circles"] = p.size();
  v["contact_edges"] = g.edge_count();
  int builder = 0;
  for (const auto& it : p.items()) builder += it.owner == Player::builder;
  v["builder_moves"] = builder;
  if (!h.empty()) v["h_found"] = contains_subgraph(g, named_graph(h));
  if (claims.contains("network")) {
    auto net = claims["network"].get<std::vector<int>>();
    bool inside = std::all_of(net.begin(), net.end(), [&](int i) { return i >= 0 && i < p.size(); });
    v["network"] = {{"size", net.size()}, {"apollonian", inside && is_apollonian(contact_graph(p, net))}};
  }
  if (claims.contains("k4_move") && claims["k4_move"].get<int>() > 0) {
    int last = nth_circle_by(p, Player::builder, claims["k4_move"].get<int>());
    std::vector<int> prefix;
    for (int i = 0; i <= last; ++i) prefix.push_back(i);
    v["k4"] = {{"winning_move", claims["winning_move"]},
               {"k4_move", claims["k4_move"]},
               {"present", last >= 0 && contains_subgraph(contact_graph(p, prefix), fixtures::complete(4))}};
  }
  return v;
}

// --- Match loop ----------------------------------------------------------------

using PackingObserver = std::function<void(const PackingGame&)>;

struct PackingMatch {
  PackingGame game;
  json transcript;
  bool aborted = false;
  std::string status;
};

inline json packing_header(const PackingMatchConfig& c, const PackingStrategy& b, const PackingStrategy& s) {
  json consts = json::object();
  for (const auto* who : {&b, &s})
    for (const auto& [k, x] : who->constants()) consts[k] = x;
  json target = json::object();
  if (!c.target.h.empty()) target["h"] = c.target.h;
  if (c.builder == "builder-apollonian") target["n"] = c.target.target_n;
  return {{"format", "planar-arena-transcript"},
          {"engine_version", kEngineVersion},
          {"game", "packing"},
          {"target", std::move(target)},
          {"bias", to_json(c.bias())},
          {"builder", {{"strategy", c.builder}, {"seed", c.seed}}},
          {"spoiler", {{"strategy", c.spoiler}, {"seed", c.seed + 1}}},
          {"budget", c.budget},
          {"tau", kTau},
          {"constants", std::move(consts)}};
}

/// Whether H sits in the contact graph near circle v (H is connected, so a
/// copy through v lies in its ball of radius diam(H)).
inline bool h_near(const PackingGame& g, int v, const Graph& h, int hops) {
  auto ball = g.ball(v, hops);
  int at = static_cast<int>(std::lower_bound(ball.begin(), ball.end(), v) - ball.begin());
  return contains_subgraph(g.induced(ball), h, at);
}

inline json strategy_claims(const PackingStrategy& b, const PackingGame& g) {
  json c = json::object();
  if (auto* apo = dynamic_cast<const BuilderApollonian*>(&b)) {
    c["network"] = apo->network();
    c["winning_move"] = apo->winning_move();
    c["k4_move"] = apo->k4_move();
    c["certified"] = apo->certified();
  }
  if (auto* box = dynamic_cast<const BuilderBox*>(&b)) {
    c["boxes"] = box->boxes();
    c["phase_one_moves"] = box->phase_one_moves();
    if (auto cells = box->winning_cells(g)) c["winning_cells"] = *cells;
  }
  return c;
}

inline PackingMatch run_packing_match(const PackingMatchConfig& c, const PackingObserver& observe = {}) {
  auto builder = make_packing_strategy(c.builder, c.seed, c.target);
  auto spoiler = make_packing_strategy(c.spoiler, c.seed + 1, c.target);
  builder->strict = spoiler->strict = c.strict;
  PackingMatch out{PackingGame(c.bias()), packing_header(c, *builder, *spoiler), false, "budget"};
  std::optional<Graph> h;
  int hops = 0;
  if (!c.target.h.empty()) {
    h = named_graph(c.target.h);
    hops = diameter(*h).value_or(h->size());
  }
  json moves = json::array();
  PackingGame& g = out.game;
  while (true) {
    if (builder->finished(g)) {
      out.status = "builder-finished";
      break;
    }
    Player p = g.turn().to_move;
    if (g.moves_by(p) >= c.budget) break;
    PackingStrategy& who = p == Player::builder ? *builder : *spoiler;
    try {
      Circle m = who.next(g);
      int i = g.apply(m, p);
      moves.push_back({{"ply", i}, {"player", to_string(p)}, {"circle", to_json(m)}});
      if (observe) observe(g);
      if (h && h_near(g, i, *h, hops)) {
        out.status = "h-found";
        break;
      }
    } catch (const arena_error& e) {
      out.aborted = true;
      out.status = "aborted";
      out.transcript["abort"] = {{"ply", g.moves()}, {"player", to_string(p)}, {"code", e.code()},
                                 {"detail", e.what()}};
      break;
    }
  }
  out.transcript["moves"] = std::move(moves);
  out.transcript["status"] = out.status;
  out.transcript["fallbacks"] = {{"builder", builder->fallbacks}, {"spoiler", spoiler->fallbacks}};
  out.transcript["claims"] = strategy_claims(*builder, g);
  out.transcript["verdict"] = packing_verdict(g.packing(), c.target.h, out.transcript["claims"]);
  return out;
}

// --- Replay and verification ----------------------------------------------

/// Replays the first `plies` moves (all when negative) through the same
/// legality checks as live play.
inline PackingGame replay_packing_transcript(const json& t, long plies = -1) {
  if (t.value("game", "") != "packing") fail(errc::malformed, "not a packing-game transcript");
  PackingGame g(bias_from_json(t.at("bias")));
  long k = 0;
  for (const auto& e : t.at("moves")) {
    if (plies >= 0 && k++ >= plies) break;
    g.apply(circle_from_json(e.at("circle")), player_from_string(e.at("player").get<std::string>()));
  }
  return g;
}

inline VerifyReport verify_packing_transcript(const json& t) {
  VerifyReport r;
  auto problem = [&](std::string what) {
    r.ok = false;
    r.problems.push_back(std::move(what));
  };
  try {
    // Rebuild without legality checks first so overlaps are reported as such.
    Packing raw;
    for (const auto& e : t.at("moves"))
      raw.add(circle_from_json(e.at("circle")), player_from_string(e.at("player").get<std::string>()), raw.size());
    if (auto v = validate_packing(raw))
      problem("validity violation: circles " + std::to_string(v->i) + " and " + std::to_string(v->j) +
              " overlap by " + std::to_string(v->depth));
    try {
      replay_packing_transcript(t);
    } catch (const arena_error& e) {
      problem(std::string("replay diverged: ") + e.what());
    }
    const json claims = t.value("claims", json::object());
    std::string h = t.at("target").value("h", "");
    r.verdict = packing_verdict(raw, h, claims);
    const json& recorded = t.at("verdict");
    if (r.verdict != recorded)
      problem("verdict mismatch: recorded " + recorded.dump() + ", recomputed " + r.verdict.dump());
  } catch (const json::exception& e) {
    fail(errc::malformed, e.what());
  }
  return r;
}

/// Dispatches on the transcript's game kind.
inline VerifyReport verify_transcript(const json& t) {
  std::string game = t.value("game", "");
  if (game == "edge") return verify_edge_transcript(t);
  if (game == "packing") return verify_packing_transcript(t);
  fail(errc::malformed, "unknown game kind '" + game + "'");
}

}  // namespace parena
