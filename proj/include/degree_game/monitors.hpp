#pragma once

#include <string>
#include <vector>

#include "degree_game/engine.hpp"

namespace degree_game {

struct MonitorReport {
  std::string name;
  bool applicable = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// After an avoider move inside C, the next opponent move never raises
/// F(C) + E(D) above its value before the avoider move, and leaves it equal
/// exactly when the opponent joined two isolated vertices.
MonitorReport monitor_freedom_budget(const GameTrace& trace);

/// Over the witness-free prefix, type-H occurrences of C (without a cut
/// vertex) see E(D) drop within two occurrences; for n >= n0 some position
/// reaches type H with E(D) = 0 or a witness.
MonitorReport monitor_type_h_progress(const GameTrace& trace);

/// C is never type Y right after an avoider move, while no witness exists
/// and before C first reaches type H with E(D) = 0.
MonitorReport monitor_no_type_y(const GameTrace& trace);

/// Once a witness appears it stays.
MonitorReport monitor_witness_persistence(const GameTrace& trace);

/// Builder path invariants after every builder move.
MonitorReport monitor_builder_path(const GameTrace& trace);

/// Re-running the strategy on the recorded opponent moves reproduces every
/// recorded strategy move.
MonitorReport monitor_strategy_replay(const GameTrace& trace);

std::vector<MonitorReport> run_all_monitors(const GameTrace& trace);

}  // namespace degree_game
