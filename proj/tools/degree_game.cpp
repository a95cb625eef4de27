#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "degree_game/batch.hpp"
#include "degree_game/classify.hpp"
#include "degree_game/exhaust.hpp"
#include "degree_game/graph_io.hpp"
#include "degree_game/session.hpp"
#include "degree_game/trace_io.hpp"

using namespace degree_game;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Smallest n at which the avoider won every one of 1000 random games in both
// move orders.
constexpr int kEmpiricalAvoiderThreshold = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("DEGREE_GAME_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("DEGREE_GAME_SEED must be a non-negative integer");
    }
  }
  return 0;
}

void check_role(Role role, int k) {
  if (role == Role::Builder && k < 4)
    throw UsageError("the builder can force a Hamiltonian graph only for k >= 4; for k = 3 the avoider wins");
  if (role == Role::Avoider && k != kCubic)
    throw UsageError("the avoider strategy is for k = 3 only; for k >= 4 the builder forces a Hamiltonian graph");
}

Role parse_role(const std::string& s) {
  try {
    return role_from_string(s);
  } catch (const Error&) {
    throw UsageError("unknown role '" + s + "'");
  }
}

std::string objective_word(Role role) {
  return role == Role::Builder ? "Hamiltonian" : "not 2-connected";
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  int k = 3, n = 0, games = 1, jobs = 1, n0 = 24;
  std::string role = "avoider", first = "strategy", opponent = "random", trace;
  std::optional<std::uint64_t> seed;
  bool table_only = false, quiet = false;
};

int run_simulate(const SimulateArgs& a) {
  const Role role = parse_role(a.role);
  if (role == Role::None) throw UsageError("simulate needs --role builder or --role avoider");
  check_role(role, a.k);
  if (a.n < 1) throw UsageError("--n must be positive");
  if (a.games < 1) throw UsageError("--games must be positive");
  BatchOptions opt;
  opt.base.n = a.n;
  opt.base.k = a.k;
  opt.base.role = role;
  opt.base.first = first_from_string(a.first);
  opt.base.opponent = opponent_from_string(a.opponent);
  opt.base.seed = a.seed ? *a.seed : default_seed();
  opt.base.n0_threshold = a.n0;
  opt.base.avoider.take_immediate_witness = !a.table_only;
  opt.games = a.games;
  opt.jobs = a.jobs;
  opt.keep_traces = !a.trace.empty();
  if (role == Role::Builder && a.opponent == "solver" && a.n > solver_bound(a.k) && !a.quiet)
    std::cerr << "note: n exceeds the solver bound, the solver opponent plays at random\n";

  BatchSummary s = run_batch(opt);
  if (!a.trace.empty()) {
    std::ofstream out(a.trace, std::ios::binary);
    if (!out) throw UsageError("cannot write " + a.trace);
    for (const auto& t : s.traces) write_trace(out, t);
  }

  std::cout << "games " << s.games << ", seeds " << opt.base.seed << ".." << opt.base.seed + s.games - 1 << '\n'
            << objective_word(role) << ": " << s.successes << '/' << s.games << '\n';
  if (role == Role::Avoider) std::cout << "witness seen: " << s.witness_games << '/' << s.games << '\n';
  std::cout << "gap decisions: " << s.gaps << '\n';
  for (const auto& [rule, count] : s.gap_rules) std::cout << "  " << rule << ": " << count << '\n';
  for (const auto& [name, t] : s.monitors) {
    std::cout << "monitor " << name << ": ";
    if (t.games == 0)
      std::cout << "not applicable\n";
    else
      std::cout << (t.violations ? "FAIL" : "pass") << " (" << t.checks << " checks in " << t.games << " games, "
                << t.violations << " violations)\n";
  }
  int shown = 0;
  for (const auto& o : s.outcomes) {
    const bool bad = !o.error.empty() || !o.objective_met || !o.monitor_violations.empty();
    if (!bad || (a.quiet && shown >= 1) || shown >= 10) continue;
    ++shown;
    std::cout << "seed " << o.seed << ": ";
    if (!o.error.empty())
      std::cout << o.error;
    else if (!o.objective_met)
      std::cout << "objective missed";
    else
      std::cout << o.monitor_violations.front();
    std::cout << '\n';
  }
  if (s.errors) {
    std::cout << "strategy errors: " << s.errors;
    if (!a.trace.empty()) std::cout << " (completed games are in " << a.trace << ")";
    std::cout << '\n';
  }
  return s.clean() ? kExitOk : kExitFailure;
}

// ----------------------------------------------------------------- exhaust

struct ExhaustArgs {
  int k = 4, n = 0, bound = kDefaultCanonicalBound;
  std::string role = "builder", first = "strategy";
  std::uint64_t max_nodes = 0;
};

int run_exhaust(const ExhaustArgs& a) {
  const Role role = parse_role(a.role);
  if (role == Role::None) throw UsageError("exhaust needs --role builder or --role avoider");
  check_role(role, a.k);
  if (a.n < 1) throw UsageError("--n must be positive");
  ExhaustOptions opt;
  opt.strategy_first = first_from_string(a.first) == FirstMover::Strategy;
  opt.bound = a.bound;
  opt.max_nodes = a.max_nodes;
  ExhaustReport r = exhaust_adversary(make_strategy(role), role, GameGraph(a.n, a.k), opt);
  std::cout << "lines explored: " << r.lines << '\n'
            << "nodes visited: " << r.nodes << '\n'
            << "isomorphism-pruned nodes: " << r.pruned << '\n'
            << objective_word(role) << ": " << r.successes << '/' << r.lines << '\n'
            << "failures: " << r.failures << ", strategy errors: " << r.errors << ", gap decisions: " << r.gaps
            << '\n';
  if (r.truncated) std::cout << "search truncated at " << a.max_nodes << " nodes\n";
  for (const auto& l : r.failure_lines) std::cout << "failing line: " << l << '\n';
  for (const auto& l : r.error_lines) std::cout << "error line: " << l << '\n';
  if (r.universal_success()) {
    std::cout << "universal success\n";
    return kExitOk;
  }
  std::cout << (r.successes == 0 && r.lines > 0 ? "universal failure" : "no universal success");
  if (role == Role::Avoider && a.n < kEmpiricalAvoiderThreshold)
    std::cout << " (n = " << a.n << " is below the empirical threshold N0 = " << kEmpiricalAvoiderThreshold
              << "; the avoider strategy is only claimed for large n)";
  std::cout << '\n';
  return kExitFailure;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  int k = 3, n = 0;
  std::string side = "pursuer", objective = "force_hamiltonian", graph;
};

int run_solve(const SolveArgs& a) {
  GameGraph g;
  if (!a.graph.empty()) {
    g = load_graph_file(a.graph);
  } else {
    if (a.n < 0 || a.k < 1) throw UsageError("--n and --k are required without --graph");
    g = GameGraph(a.n, a.k);
  }
  Side side;
  if (a.side == "pursuer")
    side = Side::Pursuer;
  else if (a.side == "opponent")
    side = Side::Opponent;
  else
    throw UsageError("--side must be pursuer or opponent");
  Objective objective;
  try {
    objective = objective_from_string(a.objective);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  SolveResult r = solve(g, side, objective);
  nlohmann::ordered_json j;
  j["k"] = g.k();
  j["n"] = g.n();
  j["side"] = to_string(r.side);
  j["objective"] = to_string(r.objective);
  j["mover_wins"] = r.mover_wins;
  j["principal_move"] = r.principal_move ? nlohmann::ordered_json::array({r.principal_move->u, r.principal_move->v})
                                         : nlohmann::ordered_json(nullptr);
  j["nodes"] = r.nodes_expanded;
  std::cout << j.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------- play

struct PlayArgs {
  int k = 3, n = 8;
  std::string human = "builder", first = "human";
  bool quiet = false;
};

int run_play(const PlayArgs& a) {
  SessionOptions opt;
  opt.k = a.k;
  opt.n = a.n;
  opt.human = parse_role(a.human);
  if (a.first != "human" && a.first != "engine") throw UsageError("--first must be human or engine");
  opt.human_first = a.first == "human";
  opt.quiet = a.quiet;
  try {
    engine_role(opt.human, opt.k);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  SessionResult r = play_session(std::cin, std::cout, opt);
  return r.finished ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& path, std::optional<int> root) {
  GameGraph g = load_graph_file(path);
  nlohmann::ordered_json out;
  out["n"] = g.n();
  out["k"] = g.k();
  auto comps = components(g);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : comps) {
    TypeLabel t = classify_component(g, c);
    list.push_back({{"vertices", c}, {"label", to_string(t.label)}, {"evidence", t.evidence}});
  }
  out["components"] = list;
  TypeAResult ta = classify_graph_typeA(g);
  out["typeA"] = {{"holds", ta.holds}, {"evidence", ta.evidence}};
  if (g.k() == kCubic) {
    WitnessReport w = has_witness(g);
    out["witness"] = w ? nlohmann::ordered_json{{"kind", to_string(w.kind)}, {"at", w.vertex}, {"structure", w.structure}}
                       : nlohmann::ordered_json(nullptr);
  }
  if (root) {
    if (!g.in_range(*root)) throw UsageError("--root out of range");
    ComponentView view = component_view(g, *root);
    AvoiderState st = classify_avoider_state(view, g);
    out["avoider_row"] = {{"row", to_string(st.row)}, {"bindings", st.bindings}, {"E_D", st.e_of_rest}};
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

// ------------------------------------------------------------- check-trace

int run_check_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<GameTrace> traces = read_traces(in);
  struct Tally {
    std::size_t checks = 0, violations = 0, applicable = 0;
  };
  std::map<std::string, Tally> totals;
  std::vector<std::string> first_violations;
  std::size_t replay_failures = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    try {
      verify_replay(traces[i]);
    } catch (const Error& e) {
      ++replay_failures;
      std::cout << "trace " << i << " (seed " << traces[i].config.seed << "): " << e.what() << '\n';
    }
    for (const auto& r : run_all_monitors(traces[i])) {
      auto& t = totals[r.name];
      if (!r.applicable) continue;
      ++t.applicable;
      t.checks += r.checks;
      t.violations += r.violations.size();
      for (const auto& v : r.violations)
        if (first_violations.size() < 10)
          first_violations.push_back("trace " + std::to_string(i) + " " + r.name + ": " + v);
    }
  }
  bool ok = replay_failures == 0;
  std::cout << "traces: " << traces.size() << ", replay: "
            << (ok ? "pass" : "FAIL (" + std::to_string(replay_failures) + " traces)") << '\n';
  for (const auto& [name, t] : totals) {
    ok = ok && t.violations == 0;
    std::cout << "monitor " << name << ": ";
    if (t.applicable == 0)
      std::cout << "not applicable\n";
    else
      std::cout << (t.violations ? "FAIL" : "pass") << " (" << t.checks << " checks, " << t.violations
                << " violations)\n";
  }
  for (const auto& v : first_violations) std::cout << "  " << v << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-capped graph building game: strategies, solver and checks"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run seeded games of a strategy against an opponent");
  simulate->add_option("--k", sim.k, "Degree cap")->required();
  simulate->add_option("--n", sim.n, "Number of vertices")->required();
  simulate->add_option("--role", sim.role, "Strategy side")->check(CLI::IsMember({"builder", "avoider"}));
  simulate->add_option("--first", sim.first, "Who moves first")->check(CLI::IsMember({"strategy", "opponent"}));
  simulate->add_option("--opponent", sim.opponent, "Opponent kind")
      ->check(CLI::IsMember({"random", "greedy", "solver"}));
  simulate->add_option("--seed", sim.seed, "First seed (default $DEGREE_GAME_SEED or 0)");
  simulate->add_option("--games", sim.games, "Number of games");
  simulate->add_option("--jobs", sim.jobs, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--trace", sim.trace, "Write JSON-lines traces here");
  simulate->add_option("--n0", sim.n0, "Threshold from which a witness is required");
  simulate->add_flag("--table-only", sim.table_only, "Avoider ignores immediate witness moves outside its table");
  simulate->add_flag("--quiet", sim.quiet, "Print at most one failing seed");

  ExhaustArgs ex;
  auto* exhaust = app.add_subcommand("exhaust", "Play the strategy against every opponent line");
  exhaust->add_option("--k", ex.k, "Degree cap")->required();
  exhaust->add_option("--n", ex.n, "Number of vertices")->required();
  exhaust->add_option("--role", ex.role, "Strategy side")->check(CLI::IsMember({"builder", "avoider"}));
  exhaust->add_option("--first", ex.first, "Who moves first")->check(CLI::IsMember({"strategy", "opponent"}));
  exhaust->add_option("--max-nodes", ex.max_nodes, "Stop after this many nodes (0: no limit)");
  exhaust->add_option("--bound", ex.bound, "Largest n for transposition pruning");

  SolveArgs so;
  auto* solve_cmd = app.add_subcommand("solve", "Exact minimax value of a position");
  solve_cmd->add_option("--k", so.k, "Degree cap");
  solve_cmd->add_option("--n", so.n, "Number of vertices");
  solve_cmd->add_option("--graph", so.graph, "Start position file (text or JSON)");
  solve_cmd->add_option("--side", so.side, "Player to move: pursuer or opponent");
  solve_cmd->add_option("--objective", so.objective,
                        "force_hamiltonian, avoid_hamiltonian or avoid_two_connected");

  PlayArgs pl;
  auto* play = app.add_subcommand("play", "Play against the engine in the terminal");
  play->add_option("--k", pl.k, "Degree cap");
  play->add_option("--n", pl.n, "Number of vertices");
  play->add_option("--human", pl.human, "Your side")->check(CLI::IsMember({"builder", "avoider"}));
  play->add_option("--first", pl.first, "human or engine");
  play->add_flag("--quiet", pl.quiet, "Hide the engine's rule tags");

  std::string graph_path;
  std::optional<int> root;
  auto* classify = app.add_subcommand("classify", "Label the components of a graph file");
  classify->add_option("--graph", graph_path, "Graph file (text or JSON)")->required();
  classify->add_option("--root", root, "Tracked vertex for the avoider table row");

  std::string trace_path;
  auto* check = app.add_subcommand("check-trace", "Replay a trace file and run every monitor");
  check->add_option("--trace", trace_path, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*exhaust) return run_exhaust(ex);
    if (*solve_cmd) return run_solve(so);
    if (*play) return run_play(pl);
    if (*classify) return run_classify(graph_path, root);
    if (*check) return run_check_trace(trace_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidConfig ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
