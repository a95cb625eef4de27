#include "degree_game/players.hpp"

namespace degree_game {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Builder: return "builder";
    case Role::Avoider: return "avoider";
    case Role::None: return "none";
  }
  return "none";
}

Role role_from_string(std::string_view s) {
  if (s == "builder") return Role::Builder;
  if (s == "avoider") return Role::Avoider;
  if (s == "none") return Role::None;
  throw Error(ErrorCode::ParseError, "unknown role '" + std::string(s) + "'");
}

Objective objective_for(Role role) {
  return role == Role::Builder ? Objective::ForceHamiltonian : Objective::AvoidTwoConnected;
}

StrategyDecision SolverPlayer::next(const GameGraph& g, const std::optional<MoveEdge>&) {
  SolveResult r = solve(g, Side::Pursuer, objective_);
  if (!r.principal_move) throw Error(ErrorCode::NoLegalMove, "no legal move left");
  return {*r.principal_move, r.mover_wins ? "solver-win" : "solver-lost", false};
}

Strategy make_strategy(Role role, const AvoiderOptions& options) {
  if (role == Role::Builder) return BuilderPlayer{};
  if (role == Role::Avoider) return AvoiderPlayer{options};
  throw Error(ErrorCode::InvalidConfig, "role 'none' has no strategy");
}

StrategyDecision strategy_move(Strategy& s, const GameGraph& g, const std::optional<MoveEdge>& opp) {
  return std::visit([&](auto& p) { return p.next(g, opp); }, s);
}

std::vector<int> strategy_colors(const Strategy& s, const GameGraph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
  if (const auto* b = std::get_if<BuilderPlayer>(&s)) {
    if (b->state()) {
      const auto& path = b->state()->path;
      for (std::size_t i = 0; i < path.size(); ++i) colors[path[i]] = static_cast<int>(i) + 1;
    }
  } else if (const auto* a = std::get_if<AvoiderPlayer>(&s)) {
    const auto& plan = a->plan();
    if (plan.root_x >= 0) colors[plan.root_x] = 1;
    int id = 2;
    for (const auto& [name, v] : plan.bindings) {
      if (name != "m" && g.in_range(v)) colors[v] |= 1 << (id % 30);
      ++id;
    }
  }
  return colors;
}

std::string strategy_tag(const Strategy& s) {
  if (const auto* a = std::get_if<AvoiderPlayer>(&s)) {
    const auto& plan = a->plan();
    return std::string(to_string(plan.phase)) + "/" + std::to_string(plan.node) + "/" +
           std::to_string(plan.root_x >= 0);
  }
  if (const auto* b = std::get_if<BuilderPlayer>(&s)) return b->state() ? "path" : "open";
  return "solver";
}

}  // namespace degree_game
