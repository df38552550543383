#pragma once

// JSON-over-HTTP play service. Routing lives in ArenaService::handle so the
// protocol can be exercised without sockets; serve() binds it to httplib.
//
//   POST /games                  create {kind, n | h | target_n, bias, epsilon, engine, human, seed}
//   GET  /games/{id}             state
//   GET  /games/{id}/slots       legal edge slots (edge game)
//   POST /games/{id}/probe       placement feasibility {x, y, r} (packing game)
//   POST /games/{id}/moves       human move; the engine's owed replies follow
//   POST /games/{id}/engine      engine plays whatever it owes
//   GET  /games/{id}/transcript
//   GET  /games/{id}/svg

#include <map>
#include <mutex>
#include <regex>

#include "planar_arena/packing_match.hpp"
#include "planar_arena/svg.hpp"

namespace parena {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

inline int http_status(const std::string& code) {
  if (code == errc::wrong_turn || code == errc::game_over) return 409;
  if (code == errc::malformed || code == errc::invalid_parameter || code == errc::non_planar) return 400;
  return 422;  // the move itself was rejected
}

class GameSession {
public:
  virtual ~GameSession() = default;
  virtual json state() const = 0;
  virtual json transcript() const = 0;
  virtual std::string svg() const = 0;
  virtual json slots() const { fail(errc::invalid_parameter, "legal slots exist only in the edge game"); }
  virtual json probe(const json&) const { fail(errc::invalid_parameter, "probes exist only in the packing game"); }
  /// Applies a human move; returns the move as recorded.
  virtual json human_move(const json& body) = 0;
  /// Engine plays until it is the human's turn or the game ends.
  virtual json engine_moves() = 0;
  virtual bool over() const = 0;

  std::mutex lock;  // one writer per game
  Player human = Player::spoiler;
};

class EdgeSession : public GameSession {
public:
  EdgeSession(const EdgeMatchConfig& c, Player human_side)
      : config_(c), state_(c.n, c.bias), engine_(make_edge_strategy(human_side == Player::builder ? c.spoiler : c.builder,
                                                                    human_side == Player::builder ? c.seed + 1 : c.seed,
                                                                    c.nominated)) {
    human = human_side;
  }

  bool over() const override { return state_.is_complete(); }

  json state() const override {
    json edges = json::array();
    for (int e = 0; e < state_.edge_count(); ++e) {
      auto [u, v] = state_.edge(e);
      edges.push_back({{"u", u}, {"v", v}, {"owner", to_string(state_.edge_owner(e))}});
    }
    json s = {{"kind", "edge"},
              {"n", state_.n()},
              {"human", to_string(human)},
              {"to_move", to_string(state_.turn().to_move)},
              {"owed", state_.turn().remaining},
              {"edges", std::move(edges)},
              {"over", over()},
              {"fingerprint", edge_fingerprint(state_)}};
    if (over()) s["verdict"] = edge_verdict(state_, config_.nominated, std::nullopt);
    return s;
  }

  json transcript() const override {
    json t = edge_header(config_);
    t[human == Player::builder ? "builder" : "spoiler"]["strategy"] = "human";
    json moves = json::array();
    for (std::size_t i = 0; i < history_.size(); ++i) moves.push_back(move_entry(i, history_[i].player, history_[i].move));
    t["moves"] = std::move(moves);
    t["status"] = over() ? "complete" : "in-progress";
    t["verdict"] = edge_verdict(state_, config_.nominated, std::nullopt);
    t["final"] = edge_fingerprint(state_);
    return t;
  }

  std::string svg() const override { return render_edge_svg(state_); }

  json slots() const override {
    json out = json::array();
    for (const auto& s : state_.legal_edge_slots()) out.push_back(to_json(s));
    return out;
  }

  json human_move(const json& body) override {
    if (state_.turn().to_move != human) fail(errc::wrong_turn, "it is the engine's turn");
    DrawMove m = draw_move_from_json(body);
    // Without an explicit partition, residents go to one side as the UI's default.
    if (!body.contains("left") && !body.contains("right") && !body.contains("outer_side"))
      m = make_move(state_, {m.u, m.v, m.region, m.corner_u, m.corner_v});
    play(m, human);
    return to_json(m);
  }

  json engine_moves() override {
    json out = json::array();
    while (!over() && state_.turn().to_move != human) {
      Player p = state_.turn().to_move;
      DrawMove m = engine_->next(state_, history_);
      play(m, p);
      out.push_back(to_json(m));
    }
    return out;
  }

private:
  void play(const DrawMove& m, Player p) {
    state_.apply_move(m, p);
    history_.push_back({p, m});
  }

  EdgeMatchConfig config_;
  PlaneState state_;
  History history_;
  std::unique_ptr<EdgeStrategy> engine_;
};

class PackingSession : public GameSession {
public:
  PackingSession(const PackingMatchConfig& c, Player human_side)
      : config_(c), game_(c.bias()),
        engine_(make_packing_strategy(human_side == Player::builder ? c.spoiler : c.builder,
                                      human_side == Player::builder ? c.seed + 1 : c.seed, c.target)) {
    human = human_side;
    if (!c.target.h.empty()) {
      h_ = named_graph(c.target.h);
      hops_ = diameter(*h_).value_or(h_->size());
    }
  }

  bool over() const override {
    if (h_found_) return true;
    if (human == Player::spoiler && engine_->finished(game_)) return true;
    return game_.moves_by(game_.turn().to_move) >= config_.budget;
  }

  json state() const override {
    json s = {{"kind", "packing"},
              {"human", to_string(human)},
              {"to_move", to_string(game_.turn().to_move)},
              {"owed", game_.turn().remaining},
              {"packing", to_json(game_.packing())},
              {"over", over()}};
    if (over()) s["verdict"] = packing_verdict(game_.packing(), config_.target.h, claims());
    return s;
  }

  json transcript() const override {
    json t = packing_header(config_, *engine_, *engine_);
    t[human == Player::builder ? "builder" : "spoiler"]["strategy"] = "human";
    t["moves"] = moves_;
    t["status"] = over() ? "complete" : "in-progress";
    t["claims"] = claims();
    t["verdict"] = packing_verdict(game_.packing(), config_.target.h, t["claims"]);
    return t;
  }

  std::string svg() const override { return render_packing_svg(game_.packing()); }

  json probe(const json& body) const override {
    Circle c = circle_from_json(body);
    json out = {{"fits", c.r > 0 && game_.packing().fits(c)}};
    if (auto v = game_.packing().blocker(c)) out["blocker"] = {{"circle", v->j}, {"depth", v->depth}};
    json touches = json::array();
    for (int j : game_.packing().near(c, game_.packing().tau * c.r))
      if (tangent(c, game_.packing()[j], game_.packing().tau)) touches.push_back(j);
    out["touches"] = std::move(touches);
    return out;
  }

  json human_move(const json& body) override {
    if (over()) fail(errc::game_over, "the game has ended");
    if (game_.turn().to_move != human) fail(errc::wrong_turn, "it is the engine's turn");
    Circle c = circle_from_json(body);
    play(c, human);
    return to_json(c);
  }

  json engine_moves() override {
    json out = json::array();
    while (!over() && game_.turn().to_move != human) {
      Circle c = engine_->next(game_);
      play(c, game_.turn().to_move);
      out.push_back(to_json(c));
    }
    return out;
  }

private:
  json claims() const { return human == Player::spoiler ? strategy_claims(*engine_, game_) : json::object(); }

  void play(const Circle& c, Player p) {
    int i = game_.apply(c, p);
    moves_.push_back({{"ply", i}, {"player", to_string(p)}, {"circle", to_json(c)}});
    if (h_ && h_near(game_, i, *h_, hops_)) h_found_ = true;
  }

  PackingMatchConfig config_;
  PackingGame game_;
  std::unique_ptr<PackingStrategy> engine_;
  json moves_ = json::array();
  std::optional<Graph> h_;
  int hops_ = 0;
  bool h_found_ = false;
};

class ArenaService {
public:
  Response handle(const std::string& method, const std::string& path, const std::string& body) {
    try {
      return route(method, path, body);
    } catch (const arena_error& e) {
      return error(http_status(e.code()), e.code(), e.what());
    } catch (const json::exception& e) {
      return error(400, errc::malformed, e.what());
    }
  }

  std::size_t game_count() {
    std::lock_guard g(games_lock_);
    return games_.size();
  }

private:
  static Response ok(const json& j, int status = 200) { return {status, j.dump(), "application/json"}; }
  static Response error(int status, const std::string& code, const std::string& detail) {
    return {status, json{{"error", code}, {"detail", detail}}.dump(), "application/json"};
  }

  std::shared_ptr<GameSession> find(const std::string& id) {
    std::lock_guard g(games_lock_);
    auto it = games_.find(id);
    if (it == games_.end()) return nullptr;
    return it->second;
  }

  Response route(const std::string& method, const std::string& path, const std::string& body) {
    static const std::regex game_path(R"(^/games/([A-Za-z0-9-]+)(/([a-z]+))?$)");
    if (path == "/games" && method == "POST") return create(body.empty() ? json::object() : json::parse(body));
    std::smatch m;
    if (!std::regex_match(path, m, game_path)) return error(404, "not-found", "no route " + method + " " + path);
    auto game = find(m[1]);
    if (!game) return error(404, "not-found", "no game " + std::string(m[1]));
    const std::string what = m[3];
    std::lock_guard g(game->lock);
    if (method == "GET" && what.empty()) return ok(game->state());
    if (method == "GET" && what == "slots") return ok(game->slots());
    if (method == "GET" && what == "transcript") return ok(game->transcript());
    if (method == "GET" && what == "svg") return {200, game->svg(), "image/svg+xml"};
    if (method == "POST" && what == "probe") return ok(game->probe(json::parse(body)));
    if (method == "POST" && what == "moves") {
      json played = game->human_move(json::parse(body));
      json replies = game->engine_moves();
      return ok({{"move", played}, {"engine_moves", replies}, {"state", game->state()}});
    }
    if (method == "POST" && what == "engine") {
      if (game->over()) fail(errc::game_over, "the game has ended");
      json replies = game->engine_moves();
      if (replies.empty()) fail(errc::wrong_turn, "it is the human's turn");
      return ok({{"engine_moves", replies}, {"state", game->state()}});
    }
    return error(404, "not-found", "no route " + method + " " + path);
  }

  Response create(const json& req) {
    const std::string kind = req.value("kind", "edge");
    const Player human = player_from_string(req.value("human", "spoiler"));
    const std::string engine = req.value("engine", kind == "edge" ? "random" : "random-circle");
    const std::uint64_t seed = req.value("seed", std::uint64_t{1});
    std::shared_ptr<GameSession> game;
    if (kind == "edge") {
      EdgeMatchConfig c;
      c.n = req.value("n", 8);
      if (c.n < 3) fail(errc::invalid_parameter, "n must be at least 3");
      c.bias = BiasSchedule::parse(req.value("bias", "1:1"), player_from_string(req.value("first", "builder")));
      c.seed = seed;
      c.nominated = req.value("nominated", 0);
      (human == Player::builder ? c.spoiler : c.builder) = engine;
      if (auto side = edge_strategy_side(engine); side && *side == human)
        fail(errc::invalid_parameter, engine + " cannot play against a human " + to_string(human));
      game = std::make_shared<EdgeSession>(c, human);
    } else if (kind == "packing") {
      PackingMatchConfig c;
      c.target.h = req.value("h", "");
      c.target.target_n = req.value("target_n", 10);
      c.target.epsilon = req.value("epsilon", 0.0);
      c.first = player_from_string(req.value("first", "builder"));
      c.seed = seed;
      c.budget = req.value("budget", kPackingBudget);
      (human == Player::builder ? c.spoiler : c.builder) = engine;
      if (auto side = packing_strategy_side(engine); side && *side == human)
        fail(errc::invalid_parameter, engine + " cannot play against a human " + to_string(human));
      game = std::make_shared<PackingSession>(c, human);
    } else {
      fail(errc::invalid_parameter, "kind must be edge or packing");
    }
    std::string id;
    {
      std::lock_guard g(games_lock_);
      id = "g" + std::to_string(++next_id_);
      games_[id] = game;
    }
    std::lock_guard g(game->lock);
    json replies = game->engine_moves();
    return ok({{"id", id}, {"engine_moves", replies}, {"state", game->state()}}, 201);
  }

  std::mutex games_lock_;
  std::map<std::string, std::shared_ptr<GameSession>> games_;
  long next_id_ = 0;
};

}  // namespace parena
