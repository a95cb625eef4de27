#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "degree_game/players.hpp"

namespace degree_game {

enum class OpponentKind { Random, Greedy, Solver, Scripted, Interactive };
enum class FirstMover { Strategy, Opponent };

std::string_view to_string(OpponentKind kind);
OpponentKind opponent_from_string(std::string_view s);
std::string_view to_string(FirstMover first);
FirstMover first_from_string(std::string_view s);

struct MoveRecord {
  int index = 0;
  int player = 1;  // 1 moves first, 2 second
  bool by_strategy = false;
  MoveEdge edge;
  std::string rule;
  bool gap = false;
};

struct Snapshot {
  int f_c = 0;
  int e_d = 0;
  std::vector<std::string> labels;  // C first, then D components
  WitnessKind witness = WitnessKind::None;
  Vertex witness_at = -1;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

using InteractiveSource = std::function<MoveEdge(const GameGraph&)>;

struct GameConfig {
  int n = 0;
  int k = 3;
  FirstMover first = FirstMover::Strategy;
  Role role = Role::Avoider;
  OpponentKind opponent = OpponentKind::Random;
  std::uint64_t seed = 0;
  std::vector<MoveEdge> script;
  InteractiveSource interactive;
  std::optional<GameGraph> initial_graph;
  int n0_threshold = 24;
  AvoiderOptions avoider;
};

/// Throws InvalidConfig when the configuration cannot be played.
void validate(const GameConfig& cfg);

struct TerminalOutcome {
  bool hamiltonian = false;
  bool two_connected = false;
  bool objective_met = false;
  int edges = 0;
};

struct GameTrace {
  GameConfig config;
  Vertex root_x = 0;
  std::vector<MoveRecord> moves;
  std::vector<Snapshot> snapshots;  // one per move, taken after it
  TerminalOutcome terminal;
  GameGraph final_graph;
  std::vector<std::string> builder_violations;
};

/// Lowest non-isolated vertex of the initial graph, else the lower endpoint of
/// the first move, else 0.
Vertex tracked_root(const std::optional<GameGraph>& initial, const std::optional<MoveEdge>& first_move);

Snapshot take_snapshot(const GameGraph& g, Vertex root);

TerminalOutcome evaluate_terminal(const GameGraph& g, Role role);

/// Move of a non-strategy player. Random and Greedy draw from `rng`.
MoveEdge opponent_move(OpponentKind kind, const GameGraph& g, Role strategy_role, std::mt19937_64& rng);

GameTrace run_game(const GameConfig& cfg);

}  // namespace degree_game
