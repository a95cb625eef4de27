#pragma once

#include <string>

#include "degree_game/graph.hpp"

namespace degree_game {

/// A chosen edge plus the rule that produced it.
struct StrategyDecision {
  MoveEdge edge;
  std::string rule;
  // Set when the strategy had to improvise (no table entry applied).
  bool gap = false;
};

}  // namespace degree_game
