#pragma once

#include <cmath>
#include <string>

#include "planar_arena/error.hpp"

namespace parena {

enum class Player { builder, spoiler };

inline Player other(Player p) { return p == Player::builder ? Player::spoiler : Player::builder; }
inline const char* to_string(Player p) { return p == Player::builder ? "builder" : "spoiler"; }
inline Player player_from_string(const std::string& s) {
  if (s == "builder") return Player::builder;
  if (s == "spoiler") return Player::spoiler;
  fail(errc::malformed, "unknown player '" + s + "'");
}

/// beta:1 / 1:beta schedules, or the (1+eps):1 schedule where Builder gets
/// one extra move every floor(1/eps) of his turns.
struct BiasSchedule {
  int builder_per_round = 1;
  int spoiler_per_round = 1;
  Player first = Player::builder;
  double epsilon = 0.0;  // 0 disables the (1+eps):1 variant

  static BiasSchedule ratio(int b, int s, Player first = Player::builder) {
    if (b < 1 || s < 1) fail(errc::invalid_parameter, "bias counts must be positive");
    return {b, s, first, 0.0};
  }
  static BiasSchedule one_plus_epsilon(double eps, Player first = Player::builder) {
    if (!(eps > 0.0 && eps <= 1.0)) fail(errc::invalid_parameter, "epsilon must lie in (0, 1]");
    return {1, 1, first, eps};
  }

  /// Parses "2:1" style strings.
  static BiasSchedule parse(const std::string& text, Player first = Player::builder) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail(errc::invalid_parameter, "bias must look like B:S");
    return ratio(std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)), first);
  }

  int extra_period() const { return static_cast<int>(std::floor(1.0 / epsilon + 1e-12)); }

  /// Moves owed by `p` in its `turn_index`-th turn (0-based).
  int owed(Player p, int turn_index) const {
    if (p == Player::spoiler) return spoiler_per_round;
    if (epsilon <= 0.0) return builder_per_round;
    int q = extra_period();
    return 1 + (((turn_index + 1) % q) == 0 ? 1 : 0);
  }

  std::string label() const {
    if (epsilon > 0.0) return "(1+" + std::to_string(epsilon) + "):1";
    return std::to_string(builder_per_round) + ":" + std::to_string(spoiler_per_round);
  }
};

/// Tracks whose turn it is and how many moves remain in that turn.
struct TurnTracker {
  BiasSchedule schedule;
  Player to_move = Player::builder;
  int remaining = 1;
  int builder_turns = 0;
  int spoiler_turns = 0;

  TurnTracker() = default;
  explicit TurnTracker(const BiasSchedule& s)
      : schedule(s), to_move(s.first), remaining(s.owed(s.first, 0)) {}

  void advance() {
    if (--remaining > 0) return;
    if (to_move == Player::builder) ++builder_turns; else ++spoiler_turns;
    to_move = other(to_move);
    remaining = schedule.owed(to_move, to_move == Player::builder ? builder_turns : spoiler_turns);
  }

  /// Ends the current turn early (used when a player has no legal move left).
  void pass() {
    remaining = 1;
    advance();
  }
};

}  // namespace parena
