#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "degree_game/classify.hpp"
#include "degree_game/decision.hpp"
#include "degree_game/graph.hpp"

namespace degree_game {

enum class AvoiderPhase {
  Main,
  TypeHAttach,        // avoider joined the type-H component to a D component
  TypeHReact,         // C type H with E(D) = 0 right after the avoider's move
  TreeAvoiderFirst,   // C type H, D empty, avoider to move
  TreeOpponentFirst,  // C type H, D empty, opponent opened with an isolated pair
  TypeAEnd,
  TypeBEnd,
  WitnessHold,
};

std::string_view to_string(AvoiderPhase phase);

struct AvoiderPlan {
  Vertex root_x = -1;
  AvoiderPhase phase = AvoiderPhase::Main;
  std::map<std::string, Vertex> bindings;
  int node = -1;  // position inside a tree or endgame, -1 outside them

  Vertex at(const std::string& name) const;
};

struct AvoiderOptions {
  // Before playing a quiet table move, play any move that completes a
  // witness. Off reproduces the bare tables.
  bool take_immediate_witness = true;
};

using AvoiderStep = std::pair<StrategyDecision, AvoiderPlan>;

/// One avoider move. `g` already contains `opp`; `view` must be current for g
/// and plan.root_x (ignored when the root is not yet fixed).
AvoiderStep avoider_respond(const AvoiderPlan& plan, const ComponentView& view, const GameGraph& g,
                            const std::optional<MoveEdge>& opp, const AvoiderOptions& options = {});

/// Pairing ((u,v),(p,q)) of four degree-2 vertices with u !~ v and p !~ q.
std::pair<MoveEdge, MoveEdge> pair_four_degree2(const GameGraph& g, std::span<const Vertex> comp,
                                                std::span<const Vertex> four);

/// Table move for the position alone (no plan, no witness search).
StrategyDecision main_table_move(const ComponentView& view, const GameGraph& g);

/// Whether adding `e` creates a witness in the component it lands in.
bool creates_witness(const GameGraph& g, const MoveEdge& e);

/// Lowest move that completes a witness, if any.
std::optional<MoveEdge> find_witness_move(const GameGraph& g);

class AvoiderPlayer {
 public:
  explicit AvoiderPlayer(AvoiderOptions options = {}) : options_(options) {}

  StrategyDecision next(const GameGraph& g, const std::optional<MoveEdge>& opp);
  const AvoiderPlan& plan() const { return plan_; }
  void set_root(Vertex x) { plan_.root_x = x; }

 private:
  AvoiderOptions options_;
  AvoiderPlan plan_;
};

}  // namespace degree_game
