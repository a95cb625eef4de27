#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degree_game/graph.hpp"

namespace degree_game {

/// A Hamilton cycle as a cyclic vertex order starting at vertex 0, or nullopt.
std::optional<std::vector<Vertex>> hamilton_cycle(const GameGraph& g);

/// Connected, at least three vertices, no cut vertex.
bool is_two_connected(const GameGraph& g);

/// Cut vertices of the graph (all vertices considered, sorted).
std::vector<Vertex> articulation_points(const GameGraph& g);

/// Whose turn it is, relative to the player pursuing the objective.
enum class Side { Pursuer, Opponent };

enum class Objective { ForceHamiltonian, AvoidHamiltonian, AvoidTwoConnected };

std::string_view to_string(Side side);
std::string_view to_string(Objective objective);
Objective objective_from_string(std::string_view s);

/// Whether a terminal (or any) graph satisfies the objective.
bool objective_holds(const GameGraph& g, Objective objective);

inline constexpr int kDefaultCanonicalBound = 8;

struct CanonicalForm {
  std::string key;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Isomorphism-invariant key of (graph, vertex colouring). `colors` may be
/// empty; otherwise one entry per vertex and only colour-preserving
/// relabelings are identified. Throws TooLarge above `bound` vertices.
std::string canonical_key(const GameGraph& g, std::span<const int> colors = {},
                          int bound = kDefaultCanonicalBound);

CanonicalForm canonical_form(const GameGraph& g, Side side, int bound = kDefaultCanonicalBound);

struct SolveResult {
  Objective objective = Objective::ForceHamiltonian;
  Side side = Side::Pursuer;
  bool mover_wins = false;
  bool pursuer_wins = false;
  std::optional<MoveEdge> principal_move;
  std::uint64_t nodes_expanded = 0;
};

/// Largest n the exact solver accepts for cap k.
int solver_bound(int k);

/// Exact game value with transposition table keyed on canonical form.
SolveResult solve(const GameGraph& g, Side side, Objective objective, int max_n = -1);

}  // namespace degree_game
