#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "degree_game/engine.hpp"
#include "degree_game/monitors.hpp"

namespace degree_game {

struct BatchOptions {
  GameConfig base;  // seed is the first game's seed; game i uses seed + i
  int games = 1;
  int jobs = 1;
  bool keep_traces = false;
  bool run_monitors = true;
};

struct GameOutcome {
  std::uint64_t seed = 0;
  bool objective_met = false;
  bool witness_seen = false;
  int gaps = 0;
  std::string error;  // non-empty when the game threw
  std::vector<std::string> monitor_violations;  // "<monitor>: <message>"
};

struct MonitorTally {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t games = 0;  // games where the monitor applied
};

struct BatchSummary {
  int games = 0;
  int successes = 0;
  int errors = 0;
  int gaps = 0;
  int witness_games = 0;
  std::map<std::string, MonitorTally> monitors;
  std::map<std::string, int> gap_rules;
  std::vector<GameOutcome> outcomes;  // in seed order
  std::vector<GameTrace> traces;      // in seed order, only with keep_traces
  bool clean() const;                 // every game met the objective, no error, no monitor fired
};

BatchSummary run_batch(const BatchOptions& options);

}  // namespace degree_game
