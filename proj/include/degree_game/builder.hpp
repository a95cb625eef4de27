#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degree_game/decision.hpp"
#include "degree_game/graph.hpp"

namespace degree_game {

/// Hamilton path on the non-isolated vertices; front() is x1, back() is x2.
struct HamPathState {
  std::vector<Vertex> path;

  Vertex x1() const { return path.front(); }
  Vertex x2() const { return path.back(); }
  bool spanning(const GameGraph& g) const { return static_cast<int>(path.size()) == g.n(); }

  friend bool operator==(const HamPathState&, const HamPathState&) = default;
};

using BuilderStep = std::pair<StrategyDecision, HamPathState>;

/// Opening move: (0,1) on an empty board, or extend the opponent's edge.
BuilderStep builder_open(const GameGraph& g);

/// Reply to `opp` (already contained in `g`) keeping the path invariants.
BuilderStep builder_respond(const HamPathState& state, const GameGraph& g, const MoveEdge& opp);

/// Closing move once the path spans every vertex.
StrategyDecision builder_close(const HamPathState& state, const GameGraph& g);

/// Describes the first violated path invariant, if any.
std::optional<std::string> check_path_invariants(const HamPathState& state, const GameGraph& g);

/// Lowest legal edge, tagged as a filler move.
StrategyDecision filler_move(const GameGraph& g);

/// Stateful wrapper used by the engine.
class BuilderPlayer {
 public:
  StrategyDecision next(const GameGraph& g, const std::optional<MoveEdge>& opp);
  const std::optional<HamPathState>& state() const { return state_; }

 private:
  std::optional<HamPathState> state_;
};

}  // namespace degree_game
