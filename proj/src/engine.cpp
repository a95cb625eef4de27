#include "degree_game/engine.hpp"

#include <algorithm>

namespace degree_game {

std::string_view to_string(OpponentKind kind) {
  switch (kind) {
    case OpponentKind::Random: return "random";
    case OpponentKind::Greedy: return "greedy";
    case OpponentKind::Solver: return "solver";
    case OpponentKind::Scripted: return "scripted";
    case OpponentKind::Interactive: return "interactive";
  }
  return "random";
}

OpponentKind opponent_from_string(std::string_view s) {
  for (auto k : {OpponentKind::Random, OpponentKind::Greedy, OpponentKind::Solver,
                 OpponentKind::Scripted, OpponentKind::Interactive})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::ParseError, "unknown opponent '" + std::string(s) + "'");
}

std::string_view to_string(FirstMover first) {
  return first == FirstMover::Strategy ? "strategy" : "opponent";
}

FirstMover first_from_string(std::string_view s) {
  if (s == "strategy") return FirstMover::Strategy;
  if (s == "opponent") return FirstMover::Opponent;
  throw Error(ErrorCode::ParseError, "unknown first mover '" + std::string(s) + "'");
}

void validate(const GameConfig& cfg) {
  if (cfg.n < 0) throw Error(ErrorCode::InvalidConfig, "n must be non-negative");
  if (cfg.k < 1) throw Error(ErrorCode::InvalidConfig, "k must be at least 1");
  if (cfg.role == Role::Builder && cfg.k < 4)
    throw Error(ErrorCode::InvalidConfig, "the builder strategy needs k >= 4");
  if (cfg.role == Role::Avoider && cfg.k != kCubic)
    throw Error(ErrorCode::InvalidConfig, "the avoider strategy needs k = 3");
  if (cfg.initial_graph) {
    if (cfg.initial_graph->n() != cfg.n || cfg.initial_graph->k() != cfg.k)
      throw Error(ErrorCode::InvalidConfig, "initial graph does not match n and k");
    if (cfg.role == Role::Builder && cfg.initial_graph->edge_count() > 0)
      throw Error(ErrorCode::InvalidConfig, "the builder strategy starts from an empty board");
  }
  if (cfg.opponent == OpponentKind::Interactive && !cfg.interactive)
    throw Error(ErrorCode::InvalidConfig, "interactive opponent needs a move source");
}

Vertex tracked_root(const std::optional<GameGraph>& initial, const std::optional<MoveEdge>& first_move) {
  if (initial)
    for (Vertex v = 0; v < initial->n(); ++v)
      if (!initial->is_isolated(v)) return v;
  return first_move ? first_move->u : 0;
}

Snapshot take_snapshot(const GameGraph& g, Vertex root) {
  Snapshot s;
  if (g.n() == 0) return s;
  ComponentView view = component_view(g, root);
  s.f_c = freedom(g, view.c_vertices).f;
  s.e_d = effective_freedom_of_rest(g, view);
  if (g.is_isolated(root))
    s.labels.emplace_back("Other");
  else
    s.labels.emplace_back(to_string(classify_component(g, view.c_vertices).label));
  for (const auto& comp : view.d_components)
    s.labels.emplace_back(to_string(classify_component(g, comp).label));
  if (g.k() == kCubic) {
    WitnessReport w = has_witness(g);
    s.witness = w.kind;
    s.witness_at = w.vertex;
  }
  return s;
}

TerminalOutcome evaluate_terminal(const GameGraph& g, Role role) {
  TerminalOutcome t;
  t.two_connected = is_two_connected(g);
  t.hamiltonian = t.two_connected && hamilton_cycle(g).has_value();
  t.edges = g.edge_count();
  switch (role) {
    case Role::Builder: t.objective_met = t.hamiltonian; break;
    case Role::Avoider: t.objective_met = !t.two_connected; break;
    case Role::None: t.objective_met = true; break;
  }
  return t;
}

namespace {

MoveEdge uniform_move(const GameGraph& g, std::mt19937_64& rng) {
  auto moves = legal_moves(g);
  if (moves.empty()) throw Error(ErrorCode::NoLegalMove, "no legal move left");
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

// Scores: joining two non-isolated components 3, non-isolated to isolated 2,
// two isolated vertices 1, inside one component 0. Ties broken at random;
// moves completing a witness are skipped while an alternative exists.
MoveEdge greedy_against_avoider(const GameGraph& g, std::mt19937_64& rng) {
  auto moves = legal_moves(g);
  if (moves.empty()) throw Error(ErrorCode::NoLegalMove, "no legal move left");
  std::shuffle(moves.begin(), moves.end(), rng);
  auto comp = component_index(g);
  auto score = [&](const MoveEdge& m) {
    const int a = comp[m.u], b = comp[m.v];
    if (a >= 0 && b >= 0) return a == b ? 0 : 3;
    if (a >= 0 || b >= 0) return 2;
    return 1;
  };
  std::stable_sort(moves.begin(), moves.end(),
                   [&](const MoveEdge& x, const MoveEdge& y) { return score(x) > score(y); });
  GameGraph probe = g;
  for (const auto& m : moves) {
    probe.insert(m);
    bool bad = static_cast<bool>(witness_in_component(probe, m.u));
    probe.erase(m);
    if (!bad) return m;
  }
  return moves.front();
}

// Scores each endpoint 2 at degree 1 and 1 at degree 2, so path ends and
// their neighbours get saturated first. Ties broken at random.
MoveEdge greedy_against_builder(const GameGraph& g, std::mt19937_64& rng) {
  auto moves = legal_moves(g);
  if (moves.empty()) throw Error(ErrorCode::NoLegalMove, "no legal move left");
  std::shuffle(moves.begin(), moves.end(), rng);
  auto end_score = [&](Vertex v) { return g.degree(v) == 1 ? 2 : g.degree(v) == 2 ? 1 : 0; };
  auto score = [&](const MoveEdge& m) { return end_score(m.u) + end_score(m.v); };
  return *std::max_element(moves.begin(), moves.end(),
                           [&](const MoveEdge& x, const MoveEdge& y) { return score(x) < score(y); });
}

}  // namespace

MoveEdge opponent_move(OpponentKind kind, const GameGraph& g, Role strategy_role, std::mt19937_64& rng) {
  switch (kind) {
    case OpponentKind::Random: return uniform_move(g, rng);
    case OpponentKind::Greedy:
      if (strategy_role == Role::Builder) return greedy_against_builder(g, rng);
      if (strategy_role == Role::Avoider) return greedy_against_avoider(g, rng);
      return uniform_move(g, rng);
    case OpponentKind::Solver: {
      if (strategy_role == Role::None || g.n() > solver_bound(g.k())) return uniform_move(g, rng);
      SolveResult r = solve(g, Side::Opponent, objective_for(strategy_role));
      if (!r.principal_move) throw Error(ErrorCode::NoLegalMove, "no legal move left");
      return *r.principal_move;
    }
    case OpponentKind::Scripted:
    case OpponentKind::Interactive:
      break;
  }
  throw Error(ErrorCode::InvalidConfig, "scripted and interactive moves come from the game loop");
}

GameTrace run_game(const GameConfig& cfg) {
  validate(cfg);
  GameTrace trace;
  trace.config = cfg;
  GameGraph g = cfg.initial_graph ? *cfg.initial_graph : GameGraph(cfg.n, cfg.k);
  std::mt19937_64 rng(cfg.seed);
  std::optional<Strategy> strategy;
  if (cfg.role != Role::None) strategy = make_strategy(cfg.role, cfg.avoider);
  const bool has_initial_edges = cfg.initial_graph && cfg.initial_graph->edge_count() > 0;
  if (strategy && has_initial_edges)
    if (auto* a = std::get_if<AvoiderPlayer>(&*strategy)) a->set_root(tracked_root(cfg.initial_graph, std::nullopt));

  std::size_t script_pos = 0;
  bool strategy_turn = cfg.first == FirstMover::Strategy;
  std::optional<MoveEdge> last_opp;
  std::optional<Vertex> root;
  if (has_initial_edges) root = tracked_root(cfg.initial_graph, std::nullopt);

  for (int i = 0; has_legal_move(g); ++i) {
    MoveRecord rec;
    rec.index = i;
    rec.player = i % 2 + 1;
    rec.by_strategy = strategy_turn && strategy.has_value();
    if (rec.by_strategy) {
      StrategyDecision d = strategy_move(*strategy, g, last_opp);
      if (auto err = g.check_move(d.edge))
        throw Error(ErrorCode::StrategyBreak, "strategy chose illegal move " + to_string(d.edge) +
                                                  " at index " + std::to_string(i) + ": " +
                                                  std::string(to_string(*err)));
      rec.edge = d.edge;
      rec.rule = d.rule;
      rec.gap = d.gap;
    } else {
      switch (cfg.opponent) {
        case OpponentKind::Scripted:
          if (script_pos >= cfg.script.size())
            throw Error(ErrorCode::ScriptExhausted, "script ran out at index " + std::to_string(i));
          rec.edge = cfg.script[script_pos++];
          break;
        case OpponentKind::Interactive: rec.edge = cfg.interactive(g); break;
        default: rec.edge = opponent_move(cfg.opponent, g, cfg.role, rng); break;
      }
      if (auto err = g.check_move(rec.edge))
        throw Error(ErrorCode::IllegalMoveByOpponent, "opponent move " + to_string(rec.edge) + " rejected: " +
                                                          std::string(to_string(*err)));
      rec.rule = "opponent-" + std::string(to_string(cfg.opponent));
      last_opp = rec.edge;
    }
    g.insert(rec.edge);
    if (!root) root = tracked_root(std::nullopt, rec.edge);
    trace.snapshots.push_back(take_snapshot(g, *root));
    if (rec.by_strategy) {
      if (const auto* b = std::get_if<BuilderPlayer>(&*strategy); b && b->state())
        if (auto v = check_path_invariants(*b->state(), g))
          trace.builder_violations.push_back("move " + std::to_string(i) + ": " + *v);
      last_opp.reset();
    }
    trace.moves.push_back(std::move(rec));
    strategy_turn = !strategy_turn;
  }
  trace.root_x = root.value_or(0);
  trace.terminal = evaluate_terminal(g, cfg.role);
  trace.final_graph = std::move(g);
  return trace;
}

}  // namespace degree_game
