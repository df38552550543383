#pragma once

// Edge-game strategies by registry name, for the CLI and the HTTP service.

#include <memory>
#include <string>
#include <vector>

#include "planar_arena/builder_degree.hpp"
#include "planar_arena/builder_ham21.hpp"
#include "planar_arena/spoiler_ham13.hpp"
#include "planar_arena/spoiler_p3t.hpp"

namespace parena {

inline const std::vector<std::string>& edge_strategy_names() {
  static const std::vector<std::string> names{"builder-ham21", "spoiler-ham13", "builder-degree", "spoiler-p3t",
                                              "random",        "greedy-blocker", "targeted-octahedron"};
  return names;
}

/// The side a named strategy plays, or nullopt when it can play either.
inline std::optional<Player> edge_strategy_side(const std::string& name) {
  if (name.rfind("builder-", 0) == 0 || name == "targeted-octahedron") return Player::builder;
  if (name.rfind("spoiler-", 0) == 0 || name == "greedy-blocker") return Player::spoiler;
  return std::nullopt;
}

inline std::unique_ptr<EdgeStrategy> make_edge_strategy(const std::string& name, std::uint64_t seed,
                                                        int nominated = 0) {
  if (name == "builder-ham21") return std::make_unique<BuilderHam21>();
  if (name == "spoiler-ham13") return std::make_unique<SpoilerHam13>();
  if (name == "builder-degree") return std::make_unique<BuilderDegree>(nominated);
  if (name == "spoiler-p3t") return std::make_unique<SpoilerP3T>();
  if (name == "random") return std::make_unique<RandomEdgePlayer>(seed);
  if (name == "greedy-blocker") return std::make_unique<GreedyBlocker>(seed);
  if (name == "targeted-octahedron")
    return std::make_unique<TargetedBuilder>(fixtures::octahedron(), name, seed);
  fail(errc::invalid_parameter, "unknown edge strategy '" + name + "'");
}

}  // namespace parena
