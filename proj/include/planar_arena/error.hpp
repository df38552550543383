#pragma once

#include <stdexcept>
#include <string>

namespace parena {

// Reason codes are stable strings; the HTTP service and transcripts echo them.
class arena_error : public std::runtime_error {
public:
  arena_error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* invalid_parameter = "invalid-parameter";
inline constexpr const char* budget_exceeded = "budget-exceeded";
inline constexpr const char* duplicate_edge = "duplicate-edge";
inline constexpr const char* illegal_move = "illegal-move";
inline constexpr const char* malformed_partition = "malformed-partition";
inline constexpr const char* wrong_turn = "wrong-turn";
inline constexpr const char* game_over = "game-over";
inline constexpr const char* strategy_confused = "strategy-confused";
inline constexpr const char* invalid_configuration = "invalid-configuration";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* non_planar = "non-planar";
inline constexpr const char* no_convergence = "no-convergence";
inline constexpr const char* malformed = "malformed";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& detail) {
  throw arena_error(code, detail);
}

}  // namespace parena
