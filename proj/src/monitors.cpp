#include "degree_game/monitors.hpp"

#include <algorithm>

namespace degree_game {

namespace {

// Graph after each move (index i holds the position after move i).
std::vector<GameGraph> positions(const GameTrace& t) {
  const GameConfig& c = t.config;
  GameGraph g = c.initial_graph ? *c.initial_graph : GameGraph(c.n, c.k);
  std::vector<GameGraph> out;
  out.reserve(t.moves.size());
  for (const auto& m : t.moves) {
    g.insert(m.edge);
    out.push_back(g);
  }
  return out;
}

bool avoider_trace(const GameTrace& t) { return t.config.role == Role::Avoider && t.config.k == kCubic; }

std::size_t first_witness(const GameTrace& t) {
  for (std::size_t i = 0; i < t.snapshots.size(); ++i)
    if (t.snapshots[i].witness != WitnessKind::None) return i;
  return t.snapshots.size();
}

// First position where C is type H with E(D) = 0; the endgame play starts there.
std::size_t first_balanced_type_h(const GameTrace& t) {
  for (std::size_t i = 0; i < t.snapshots.size(); ++i) {
    const Snapshot& s = t.snapshots[i];
    if (!s.labels.empty() && s.labels.front() == "TypeH" && s.e_d == 0) return i;
  }
  return t.snapshots.size();
}

std::string at(std::size_t i) { return "move " + std::to_string(i) + ": "; }

}  // namespace

MonitorReport monitor_freedom_budget(const GameTrace& t) {
  MonitorReport r{"freedom_budget"};
  if (!avoider_trace(t)) {
    r.applicable = false;
    return r;
  }
  auto pos = positions(t);
  for (std::size_t i = 1; i + 1 < t.moves.size(); ++i) {
    const MoveRecord& mv = t.moves[i];
    if (!mv.by_strategy) continue;
    const GameGraph& before = pos[i - 1];
    ComponentView view = component_view(before, t.root_x);
    if (!view.in_c(mv.edge.u) || !view.in_c(mv.edge.v)) continue;
    ++r.checks;
    const int fe_before = t.snapshots[i - 1].f_c + t.snapshots[i - 1].e_d;
    const int fe_after = t.snapshots[i + 1].f_c + t.snapshots[i + 1].e_d;
    const MoveEdge opp = t.moves[i + 1].edge;
    const bool iso_pair = pos[i].is_isolated(opp.u) && pos[i].is_isolated(opp.v);
    if (fe_after > fe_before)
      r.violations.push_back(at(i + 1) + "F(C)+E(D) rose from " + std::to_string(fe_before) + " to " +
                             std::to_string(fe_after));
    else if ((fe_after == fe_before) != iso_pair)
      r.violations.push_back(at(i + 1) + (iso_pair ? "isolated pair without equality"
                                                   : "equality without an isolated pair"));
  }
  return r;
}

MonitorReport monitor_type_h_progress(const GameTrace& t) {
  MonitorReport r{"type_h_progress"};
  if (!avoider_trace(t)) {
    r.applicable = false;
    return r;
  }
  const std::size_t cut = first_witness(t);
  std::vector<std::size_t> s;
  bool reached = cut < t.snapshots.size();
  for (std::size_t i = 0; i < cut; ++i) {
    const Snapshot& snap = t.snapshots[i];
    if (snap.labels.empty() || snap.labels.front() != "TypeH") continue;
    s.push_back(i);
    if (snap.e_d == 0) {
      reached = true;
      break;
    }
  }
  auto e = [&](std::size_t i) { return t.snapshots[i].e_d; };
  for (std::size_t a = 0; a < s.size(); ++a) {
    const int y = e(s[a]);
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[b] <= s[a] + 1) continue;
      ++r.checks;
      if (e(s[b]) > y) {
        r.violations.push_back(at(s[b]) + "E(D) rose above " + std::to_string(y) + " seen at move " +
                               std::to_string(s[a]));
        continue;
      }
      if (e(s[b]) < y) continue;
      for (std::size_t c = b + 1; c < s.size(); ++c)
        if (s[c] > s[b] + 1 && e(s[c]) >= y)
          r.violations.push_back(at(s[c]) + "E(D) did not drop below " + std::to_string(y) +
                                 " by the third type-H occurrence");
    }
  }
  if (t.config.n >= t.config.n0_threshold) {
    ++r.checks;
    if (!reached) r.violations.push_back("no type-H position with E(D) = 0 and no witness in the whole game");
  }
  return r;
}

MonitorReport monitor_no_type_y(const GameTrace& t) {
  MonitorReport r{"no_type_y"};
  if (!avoider_trace(t)) {
    r.applicable = false;
    return r;
  }
  const std::size_t cut = first_witness(t);
  const std::size_t endgame = first_balanced_type_h(t);
  for (std::size_t i = 0; i < t.moves.size() && i < cut && i < endgame; ++i) {
    if (!t.moves[i].by_strategy) continue;
    ++r.checks;
    if (!t.snapshots[i].labels.empty() && t.snapshots[i].labels.front() == "TypeY")
      r.violations.push_back(at(i) + "C is type Y after the avoider move (" + t.moves[i].rule + ")");
  }
  return r;
}

MonitorReport monitor_witness_persistence(const GameTrace& t) {
  MonitorReport r{"witness_persistence"};
  if (t.config.k != kCubic) {
    r.applicable = false;
    return r;
  }
  const std::size_t cut = first_witness(t);
  for (std::size_t i = cut; i < t.snapshots.size(); ++i) {
    ++r.checks;
    if (t.snapshots[i].witness == WitnessKind::None) r.violations.push_back(at(i) + "witness vanished");
  }
  if (t.config.role == Role::Avoider && t.config.n >= t.config.n0_threshold) {
    ++r.checks;
    if (cut == t.snapshots.size()) r.violations.push_back("no witness ever appeared");
  }
  return r;
}

MonitorReport monitor_builder_path(const GameTrace& t) {
  MonitorReport r{"builder_path"};
  if (t.config.role != Role::Builder) {
    r.applicable = false;
    return r;
  }
  for (const auto& v : t.builder_violations) r.violations.push_back("recorded: " + v);
  BuilderPlayer player;
  GameGraph g = t.config.initial_graph ? *t.config.initial_graph : GameGraph(t.config.n, t.config.k);
  std::optional<MoveEdge> opp;
  for (const auto& m : t.moves) {
    if (m.by_strategy) {
      try {
        player.next(g, opp);
      } catch (const Error& e) {
        r.violations.push_back(at(m.index) + e.what());
        return r;
      }
      opp.reset();
    } else {
      opp = m.edge;
    }
    g.insert(m.edge);
    if (m.by_strategy && player.state()) {
      ++r.checks;
      if (auto v = check_path_invariants(*player.state(), g)) r.violations.push_back(at(m.index) + *v);
    }
  }
  return r;
}

MonitorReport monitor_strategy_replay(const GameTrace& t) {
  MonitorReport r{"strategy_replay"};
  if (t.config.role == Role::None) {
    r.applicable = false;
    return r;
  }
  Strategy s = make_strategy(t.config.role, t.config.avoider);
  const GameConfig& c = t.config;
  GameGraph g = c.initial_graph ? *c.initial_graph : GameGraph(c.n, c.k);
  if (c.initial_graph && c.initial_graph->edge_count() > 0)
    if (auto* a = std::get_if<AvoiderPlayer>(&s)) a->set_root(tracked_root(c.initial_graph, std::nullopt));
  std::optional<MoveEdge> opp;
  for (const auto& m : t.moves) {
    if (m.by_strategy) {
      ++r.checks;
      try {
        StrategyDecision d = strategy_move(s, g, opp);
        if (d.edge != m.edge || d.rule != m.rule)
          r.violations.push_back(at(m.index) + "strategy now plays " + to_string(d.edge) + " (" + d.rule +
                                 "), trace has " + to_string(m.edge) + " (" + m.rule + ")");
      } catch (const Error& e) {
        r.violations.push_back(at(m.index) + e.what());
      }
      if (!r.violations.empty()) return r;
      opp.reset();
    } else {
      opp = m.edge;
    }
    g.insert(m.edge);
  }
  return r;
}

std::vector<MonitorReport> run_all_monitors(const GameTrace& t) {
  return {monitor_freedom_budget(t),      monitor_type_h_progress(t), monitor_no_type_y(t),
          monitor_witness_persistence(t), monitor_builder_path(t),    monitor_strategy_replay(t)};
}

}  // namespace degree_game
