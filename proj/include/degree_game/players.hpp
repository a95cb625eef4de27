#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degree_game/avoider.hpp"
#include "degree_game/builder.hpp"
#include "degree_game/oracle.hpp"

namespace degree_game {

enum class Role { Builder, Avoider, None };

std::string_view to_string(Role role);
Role role_from_string(std::string_view s);

/// The objective a role pursues on the terminal graph.
Objective objective_for(Role role);

/// Plays the solver's principal move for a fixed objective.
class SolverPlayer {
 public:
  explicit SolverPlayer(Objective objective) : objective_(objective) {}
  StrategyDecision next(const GameGraph& g, const std::optional<MoveEdge>& opp);

 private:
  Objective objective_;
};

using Strategy = std::variant<BuilderPlayer, AvoiderPlayer, SolverPlayer>;

Strategy make_strategy(Role role, const AvoiderOptions& options = {});

StrategyDecision strategy_move(Strategy& s, const GameGraph& g, const std::optional<MoveEdge>& opp);

/// Per-vertex colouring of the strategy's private state, so that two
/// positions with equal canonical keys behave alike under the strategy.
std::vector<int> strategy_colors(const Strategy& s, const GameGraph& g);

/// Non-vertex part of the strategy state (phase names and similar).
std::string strategy_tag(const Strategy& s);

}  // namespace degree_game
