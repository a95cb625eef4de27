#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "degree_game/players.hpp"

namespace degree_game {

struct ExhaustOptions {
  bool strategy_first = true;
  int bound = kDefaultCanonicalBound;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  std::size_t keep_examples = 5;
};

struct ExhaustReport {
  std::uint64_t lines = 0;      // terminal positions reached
  std::uint64_t nodes = 0;      // positions visited
  std::uint64_t pruned = 0;     // opponent nodes skipped as transpositions
  std::uint64_t successes = 0;  // lines where the objective held
  std::uint64_t failures = 0;
  std::uint64_t errors = 0;     // strategy exceptions; the line then continues with lowest legal moves
  std::uint64_t gaps = 0;       // decisions flagged as off-table
  bool truncated = false;
  // Terminal graph class (canonical key) -> objective held.
  std::map<std::string, bool> terminal_classes;
  std::vector<std::string> failure_lines;
  std::vector<std::string> error_lines;

  bool universal_success() const { return failures == 0 && errors == 0 && !truncated && lines > 0; }
};

/// Plays `strategy` against every opponent line from `g0`, merging opponent
/// nodes whose (graph, strategy state) agree up to isomorphism.
ExhaustReport exhaust_adversary(const Strategy& strategy, Role role, const GameGraph& g0,
                                const ExhaustOptions& options = {});

}  // namespace degree_game
