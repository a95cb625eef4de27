#include "degree_game/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace degree_game {

bool BatchSummary::clean() const {
  if (successes != games || errors != 0) return false;
  for (const auto& [name, tally] : monitors)
    if (tally.violations) return false;
  return true;
}

namespace {

struct Slot {
  GameOutcome outcome;
  std::optional<GameTrace> trace;
  std::vector<MonitorReport> reports;
  std::map<std::string, int> gap_rules;
};

Slot play_one(const BatchOptions& opt, int i) {
  Slot slot;
  GameConfig cfg = opt.base;
  cfg.seed = opt.base.seed + static_cast<std::uint64_t>(i);
  slot.outcome.seed = cfg.seed;
  try {
    GameTrace t = run_game(cfg);
    slot.outcome.objective_met = t.terminal.objective_met;
    for (const auto& s : t.snapshots)
      if (s.witness != WitnessKind::None) slot.outcome.witness_seen = true;
    for (const auto& m : t.moves)
      if (m.gap) {
        ++slot.outcome.gaps;
        ++slot.gap_rules[m.rule];
      }
    if (opt.run_monitors) {
      slot.reports = run_all_monitors(t);
      for (const auto& r : slot.reports)
        for (const auto& v : r.violations) slot.outcome.monitor_violations.push_back(r.name + ": " + v);
    }
    if (opt.keep_traces) slot.trace = std::move(t);
  } catch (const Error& e) {
    slot.outcome.error = e.what();
  }
  return slot;
}

}  // namespace

BatchSummary run_batch(const BatchOptions& opt) {
  validate(opt.base);
  const int games = std::max(0, opt.games);
  std::vector<Slot> slots(static_cast<std::size_t>(games));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < games; i = next++) slots[static_cast<std::size_t>(i)] = play_one(opt, i);
  };
  const int jobs = std::clamp(opt.jobs, 1, std::max(1, games));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  BatchSummary sum;
  sum.games = games;
  for (auto& slot : slots) {
    const GameOutcome& o = slot.outcome;
    if (!o.error.empty()) ++sum.errors;
    else if (o.objective_met) ++sum.successes;
    if (o.witness_seen) ++sum.witness_games;
    sum.gaps += o.gaps;
    for (const auto& [rule, count] : slot.gap_rules) sum.gap_rules[rule] += count;
    for (const auto& r : slot.reports) {
      MonitorTally& t = sum.monitors[r.name];
      if (!r.applicable) continue;
      ++t.games;
      t.checks += r.checks;
      t.violations += r.violations.size();
    }
    if (slot.trace) sum.traces.push_back(std::move(*slot.trace));
    sum.outcomes.push_back(std::move(slot.outcome));
  }
  return sum;
}

}  // namespace degree_game
