#pragma once

// Packing-game strategies by registry name.

#include <memory>
#include <string>
#include <vector>

#include "planar_arena/builder_apollonian.hpp"
#include "planar_arena/builder_box.hpp"

namespace parena {

/// Target graphs the packing game knows by name.
inline Graph named_graph(const std::string& name) {
  if (name == "k4") return fixtures::complete(4);
  if (name == "octahedron") return fixtures::octahedron();
  if (name == "prism") return fixtures::pentagonal_prism();
  if (name == "k3") return fixtures::complete(3);
  fail(errc::invalid_parameter, "unknown target graph '" + name + "'");
}

inline const std::vector<std::string>& packing_strategy_names() {
  static const std::vector<std::string> names{"spoiler-gamma", "builder-box", "builder-apollonian", "random-circle",
                                              "greedy-circle-blocker", "scripted-octahedron"};
  return names;
}

inline std::optional<Player> packing_strategy_side(const std::string& name) {
  if (name.rfind("builder-", 0) == 0 || name == "scripted-octahedron") return Player::builder;
  if (name.rfind("spoiler-", 0) == 0 || name == "greedy-circle-blocker") return Player::spoiler;
  return std::nullopt;
}

struct PackingTarget {
  std::string h;      // named graph for builder-box, or empty
  int target_n = 10;  // network size for builder-apollonian
  double epsilon = 0; // > 0 selects the (1+eps):1 schedule
};

inline std::unique_ptr<PackingStrategy> make_packing_strategy(const std::string& name, std::uint64_t seed,
                                                              const PackingTarget& t) {
  if (name == "builder-box") {
    if (t.h.empty()) fail(errc::invalid_parameter, "builder-box needs a target graph");
    if (!(t.epsilon > 0)) fail(errc::invalid_parameter, "builder-box plays the (1+eps):1 game");
    return std::make_unique<BuilderBox>(named_graph(t.h), t.epsilon);
  }
  if (name == "builder-apollonian") return std::make_unique<BuilderApollonian>(t.target_n);
  if (name == "spoiler-gamma") return std::make_unique<SpoilerGamma>(t.h.empty() ? 3 : named_graph(t.h).max_degree());
  if (name == "random-circle") return std::make_unique<RandomCircle>(seed);
  if (name == "greedy-circle-blocker") return std::make_unique<GreedyCircleBlocker>(seed);
  if (name == "scripted-octahedron") return std::make_unique<ScriptedLayout>(fixtures::octahedron(), name);
  fail(errc::invalid_parameter, "unknown packing strategy '" + name + "'");
}

}  // namespace parena
