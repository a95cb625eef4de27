#pragma once

#include <iosfwd>
#include <string>

#include "degree_game/engine.hpp"

namespace degree_game {

struct SessionOptions {
  int n = 8;
  int k = 3;
  Role human = Role::Builder;  // the engine takes the other role
  bool human_first = true;
  bool quiet = false;          // hide the engine's rule tags
};

struct SessionResult {
  bool finished = false;  // false when input ended early
  GameGraph final_graph;
  TerminalOutcome terminal;  // judged for the engine's role
};

/// Role the engine plays against a human in `human`; throws InvalidConfig
/// when no engine strategy exists for that pairing.
Role engine_role(Role human, int k);

/// Position report: edges, degree table, component labels, F(C) and E(D).
std::string describe_position(const GameGraph& g, Vertex root);

/// Text of the first witness in `g`, or "none".
std::string describe_witness(const GameGraph& g);

/// Reads "u v" lines from `in` for the human and answers with the engine.
SessionResult play_session(std::istream& in, std::ostream& out, const SessionOptions& options);

}  // namespace degree_game
