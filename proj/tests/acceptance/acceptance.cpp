// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include <unistd.h>

#include "degree_game/avoider.hpp"
#include "degree_game/engine.hpp"
#include "degree_game/exhaust.hpp"
#include "degree_game/monitors.hpp"
#include "degree_game/trace_io.hpp"

using namespace degree_game;

namespace {

// Pinned parameters and tolerances.
constexpr int kSeeds = 1000;                     // seeds per configuration and move order
constexpr std::uint64_t kAllowedFailures = 0;    // objective misses, errors, monitor violations
constexpr double kExhaustBudgetSeconds = 300.0;  // criterion 1
constexpr double kSolverBudgetSeconds = 120.0;   // criterion 5
constexpr int kWitnessSamples = 10000;           // criterion 6, random positions where a witness fires
constexpr int kWitnessMaxN = 9;
constexpr int kWitnessAllGraphsN = 6;
constexpr int kPairingSamples = 10000;  // criterion 8
constexpr int kPairingMaxN = 12;
constexpr int kScanFrom = 8;  // smallest n tried when locating N0
const std::vector<int> kBuilderSizes{8, 12, 16, 20};
const std::vector<int> kAvoiderSizes{24, 30, 40};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
};

void report(int id, const Verdict& v, double seconds) {
  std::printf("criterion %2d: %s  %s (%.1fs)\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str(), seconds);
  std::fflush(stdout);
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}
constexpr std::uint64_t kFnvBasis = 14695981039346656037ULL;

// ---------------------------------------------------------------- game runs

struct RunTally {
  int games = 0;
  int successes = 0;
  int errors = 0;
  int witness_games = 0;
  int replay_failures = 0;
  std::map<std::string, std::size_t> violations;
  std::map<std::string, std::size_t> checks;
  std::uint64_t digest = kFnvBasis;
  std::string first_problem;

  bool all_met() const { return successes == games && errors == 0; }
  std::size_t violation_total() const {
    std::size_t t = 0;
    for (const auto& [name, v] : violations) t += v;
    return t;
  }
  void merge(const RunTally& o) {
    games += o.games;
    successes += o.successes;
    errors += o.errors;
    witness_games += o.witness_games;
    replay_failures += o.replay_failures;
    for (const auto& [k, v] : o.violations) violations[k] += v;
    for (const auto& [k, v] : o.checks) checks[k] += v;
    if (first_problem.empty()) first_problem = o.first_problem;
  }
};

// Plays seeds 0..kSeeds-1 in both move orders. Each trace is serialized,
// parsed back, replayed and handed to every monitor, as check-trace does.
RunTally run_config(GameConfig base, bool full_checks) {
  RunTally tally;
  for (FirstMover first : {FirstMover::Strategy, FirstMover::Opponent}) {
    for (int seed = 0; seed < kSeeds; ++seed) {
      GameConfig c = base;
      c.first = first;
      c.seed = static_cast<std::uint64_t>(seed);
      ++tally.games;
      auto note = [&](const std::string& what) {
        if (tally.first_problem.empty())
          tally.first_problem = "n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + " first=" +
                                std::string(to_string(first)) + " seed=" + std::to_string(seed) + ": " + what;
      };
      try {
        GameTrace t = run_game(c);
        const std::string text = trace_to_string(t);
        tally.digest = fnv1a(tally.digest, text);
        if (t.terminal.objective_met) ++tally.successes;
        else note("objective missed");
        for (const auto& s : t.snapshots)
          if (s.witness != WitnessKind::None) {
            ++tally.witness_games;
            break;
          }
        if (!full_checks) continue;
        std::istringstream in(text);
        auto parsed = read_traces(in);
        try {
          verify_replay(parsed.at(0));
        } catch (const Error& e) {
          ++tally.replay_failures;
          note(e.what());
        }
        for (const auto& r : run_all_monitors(parsed.at(0))) {
          tally.checks[r.name] += r.checks;
          tally.violations[r.name] += r.violations.size();
          if (!r.violations.empty()) note(r.name + ": " + r.violations.front());
        }
      } catch (const Error& e) {
        ++tally.errors;
        note(e.what());
      }
    }
  }
  return tally;
}

GameConfig builder_config(int n, int k, OpponentKind opp = OpponentKind::Random) {
  GameConfig c;
  c.n = n;
  c.k = k;
  c.role = Role::Builder;
  c.opponent = opp;
  return c;
}

GameConfig avoider_config(int n, OpponentKind opp) {
  GameConfig c;
  c.n = n;
  c.k = kCubic;
  c.role = Role::Avoider;
  c.opponent = opp;
  return c;
}

std::string count_line(const RunTally& t) {
  std::ostringstream s;
  s << t.successes << '/' << t.games << " met, errors " << t.errors;
  return s.str();
}

// ------------------------------------------------------------- criterion 1

Verdict exhaustive_builder() {
  Verdict v;
  const auto start = Clock::now();
  std::ostringstream d;
  std::uint64_t lines = 0, pruned = 0;
  for (int n : {4, 5, 6})
    for (bool first : {true, false}) {
      ExhaustOptions opt;
      opt.strategy_first = first;
      ExhaustReport r = exhaust_adversary(make_strategy(Role::Builder), Role::Builder, GameGraph(n, 4), opt);
      lines += r.lines;
      pruned += r.pruned;
      if (!r.universal_success() || r.successes != r.lines) {
        v.pass = false;
        d << "n=" << n << (first ? " builder first" : " builder second") << ": " << r.failures << " failures, "
          << r.errors << " errors; ";
      }
    }
  const double secs = since(start);
  if (secs > kExhaustBudgetSeconds) {
    v.pass = false;
    d << "over time budget; ";
  }
  d << "k=4 n=4..6 both orders: " << lines << " lines all Hamiltonian, " << pruned << " transpositions pruned";
  v.detail = d.str();
  return v;
}

// ------------------------------------------------------------- criterion 2

Verdict random_builder(std::map<std::string, RunTally>& runs) {
  Verdict v;
  RunTally all;
  std::ostringstream d;
  for (int k : {4, 5})
    for (int n : kBuilderSizes) {
      RunTally& t = runs["b" + std::to_string(k) + "-" + std::to_string(n)];
      t = run_config(builder_config(n, k), true);
      if (!t.all_met() || t.violations["builder_path"] > kAllowedFailures) {
        v.pass = false;
        d << "k=" << k << " n=" << n << ": " << count_line(t) << "; ";
      }
      all.merge(t);
    }
  if (all.replay_failures || all.violation_total()) v.pass = false;
  d << "k=4,5 n=8..20: " << count_line(all) << ", path invariant checked " << all.checks["builder_path"]
    << " times with " << all.violations["builder_path"] << " violations";
  if (!v.pass && !all.first_problem.empty()) d << "; first problem " << all.first_problem;
  v.detail = d.str();
  return v;
}

// ---------------------------------------------------------- criteria 3, 4

struct AvoiderRuns {
  std::map<int, RunTally> random;
  std::map<int, RunTally> greedy;
  int n0 = -1;
};

int locate_n0(const std::map<int, RunTally>& by_n) {
  int n0 = -1;
  for (auto it = by_n.rbegin(); it != by_n.rend(); ++it) {
    if (!it->second.all_met()) break;
    n0 = it->first;
  }
  return n0;
}

Verdict random_avoider(AvoiderRuns& runs) {
  Verdict v;
  std::ostringstream d;
  for (int n : kAvoiderSizes) runs.random[n] = run_config(avoider_config(n, OpponentKind::Random), true);
  for (int n = kScanFrom; n < kAvoiderSizes.front(); ++n)
    runs.random[n] = run_config(avoider_config(n, OpponentKind::Random), false);
  runs.n0 = locate_n0(runs.random);
  RunTally main;
  for (int n : kAvoiderSizes) {
    const RunTally& t = runs.random.at(n);
    main.merge(t);
    if (!t.all_met() || t.witness_games != t.games) v.pass = false;
    d << "n=" << n << " " << t.successes << '/' << t.games << " not 2-connected, witness in " << t.witness_games
      << "; ";
  }
  d << "empirical N0 = " << runs.n0 << " (failures below:";
  for (int n = kScanFrom; n < runs.n0; ++n) d << ' ' << n << ':' << runs.random.at(n).games - runs.random.at(n).successes;
  d << ")";
  if (!v.pass && !main.first_problem.empty()) d << "; first problem " << main.first_problem;
  v.detail = d.str();
  return v;
}

Verdict greedy_avoider(AvoiderRuns& runs) {
  Verdict v;
  std::ostringstream d;
  if (runs.n0 < 0) return {false, "no N0 from criterion 3"};
  std::vector<int> sizes;
  for (int n = runs.n0; n < kAvoiderSizes.front(); ++n) sizes.push_back(n);
  sizes.insert(sizes.end(), kAvoiderSizes.begin(), kAvoiderSizes.end());
  RunTally all;
  for (int n : sizes) {
    runs.greedy[n] = run_config(avoider_config(n, OpponentKind::Greedy), true);
    const RunTally& t = runs.greedy.at(n);
    all.merge(t);
    if (!t.all_met()) {
      v.pass = false;
      d << "n=" << n << ": " << count_line(t) << "; ";
    }
  }
  std::size_t witness_required = 0;
  for (int n : kAvoiderSizes) witness_required += runs.greedy.at(n).games - runs.greedy.at(n).witness_games;
  if (witness_required) v.pass = false;
  d << "greedy opponent, n=" << sizes.front() << ".." << sizes.back() << " (" << sizes.size()
    << " sizes): " << count_line(all) << ", witness missing in " << witness_required << " games at n>=24";
  if (!v.pass && !all.first_problem.empty()) d << "; first problem " << all.first_problem;
  v.detail = d.str();
  return v;
}

// ------------------------------------------------------------- criterion 5

bool brute_pursuer_wins(GameGraph& g, bool pursuer_to_move, Objective obj) {
  auto moves = legal_moves(g);
  if (moves.empty()) return objective_holds(g, obj);
  for (const auto& m : moves) {
    g.insert(m);
    const bool w = brute_pursuer_wins(g, !pursuer_to_move, obj);
    g.erase(m);
    if (w == pursuer_to_move) return w;
  }
  return !pursuer_to_move;
}

Verdict solver_ground_truth() {
  Verdict v;
  const auto start = Clock::now();
  std::ostringstream d;
  for (Side side : {Side::Pursuer, Side::Opponent}) {
    if (!solve(GameGraph(3, 3), side, Objective::ForceHamiltonian).pursuer_wins) {
      v.pass = false;
      d << "k=3 n=3 not forced; ";
    }
    if (solve(GameGraph(2, 3), side, Objective::ForceHamiltonian).pursuer_wins) {
      v.pass = false;
      d << "k=3 n=2 attainable; ";
    }
  }
  int compared = 0, disagreements = 0;
  for (int k : {3, 4})
    for (int n = 1; n <= 5; ++n)
      for (Objective obj : {Objective::ForceHamiltonian, Objective::AvoidHamiltonian, Objective::AvoidTwoConnected})
        for (Side side : {Side::Pursuer, Side::Opponent}) {
          GameGraph g(n, k);
          const bool brute = brute_pursuer_wins(g, side == Side::Pursuer, obj);
          ++compared;
          if (solve(GameGraph(n, k), side, obj).pursuer_wins != brute) ++disagreements;
        }
  if (disagreements) v.pass = false;
  const double secs = since(start);
  if (secs > kSolverBudgetSeconds) v.pass = false;
  d << "triangle forced at n=3, unattainable at n=2; " << compared - disagreements << '/' << compared
    << " empty-board instances (k=3,4, n<=5, 3 objectives, 2 sides) match plain minimax";
  v.detail = d.str();
  return v;
}

// ------------------------------------------------------------- criterion 6

// Is there a Hamilton cycle C on the vertex set with G + C of maximum degree
// at most 3? Any Hamiltonian supergraph within the cap contains such a C.
class CompletionSearch {
 public:
  explicit CompletionSearch(const GameGraph& g) : g_(g), budget_(g.n()), used_(g.n(), 0) {
    for (Vertex v = 0; v < g.n(); ++v) budget_[v] = 3 - g.degree(v);
  }

  bool hamiltonian_completion() {
    if (g_.n() < 3) return false;
    used_[0] = 1;
    return extend(0, 1);
  }

 private:
  bool take(Vertex a, Vertex b) {
    if (g_.adjacent(a, b)) return true;
    if (budget_[a] == 0 || budget_[b] == 0) return false;
    --budget_[a];
    --budget_[b];
    return true;
  }
  void give(Vertex a, Vertex b) {
    if (g_.adjacent(a, b)) return;
    ++budget_[a];
    ++budget_[b];
  }
  bool extend(Vertex cur, int placed) {
    if (placed == g_.n()) {
      if (!take(cur, 0)) return false;
      give(cur, 0);
      return true;
    }
    for (Vertex u = 1; u < g_.n(); ++u) {
      if (used_[u] || !take(cur, u)) continue;
      used_[u] = 1;
      const bool found = extend(u, placed + 1);
      used_[u] = 0;
      give(cur, u);
      if (found) return true;
    }
    return false;
  }

  const GameGraph& g_;
  std::vector<int> budget_;
  std::vector<char> used_;
};

std::vector<GameGraph> all_subcubic(int n) {
  std::vector<GameGraph> out{GameGraph(n, 3)};
  std::unordered_set<std::string> seen{canonical_key(out[0], {}, n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& m : legal_moves(out[i])) {
      GameGraph h = add_edge(out[i], m);
      if (seen.insert(canonical_key(h, {}, n)).second) out.push_back(std::move(h));
    }
  return out;
}

Verdict witness_soundness() {
  Verdict v;
  int exhaustive = 0, exhaustive_fired = 0, counterexamples = 0;
  for (int n = 1; n <= kWitnessAllGraphsN; ++n)
    for (const GameGraph& g : all_subcubic(n)) {
      ++exhaustive;
      if (!has_witness(g)) continue;
      ++exhaustive_fired;
      if (CompletionSearch(g).hamiltonian_completion()) ++counterexamples;
    }
  std::mt19937_64 rng(20240611);
  int sampled = 0, fired = 0, completable_without_witness = 0;
  while (fired < kWitnessSamples) {
    const int n = 4 + static_cast<int>(rng() % (kWitnessMaxN - 3));
    GameGraph g(n, 3);
    const int stop = static_cast<int>(rng() % (3 * n / 2 + 1));
    for (int i = 0; i < stop; ++i) {
      auto moves = legal_moves(g);
      if (moves.empty()) break;
      g.insert(moves[rng() % moves.size()]);
    }
    ++sampled;
    const bool w = static_cast<bool>(has_witness(g));
    const bool completable = CompletionSearch(g).hamiltonian_completion();
    if (w) {
      ++fired;
      if (completable) ++counterexamples;
    } else if (completable) {
      ++completable_without_witness;
    }
  }
  v.pass = counterexamples == 0;
  std::ostringstream d;
  d << "all " << exhaustive << " subcubic graphs up to isomorphism on <=6 vertices (" << exhaustive_fired
    << " with a witness) and " << fired << " random witness positions on <=9 vertices (from " << sampled
    << " samples): " << counterexamples << " Hamiltonian completions";
  v.detail = d.str();
  return v;
}

// ---------------------------------------------------------- criteria 7, 9

Verdict monitor_over_avoider_runs(const AvoiderRuns& runs, const std::string& monitor) {
  std::size_t checks = 0, violations = 0, games = 0;
  std::string first;
  for (const auto* group : {&runs.random, &runs.greedy})
    for (const auto& [n, t] : *group) {
      if (!t.checks.count(monitor)) continue;
      games += t.games;
      checks += t.checks.at(monitor);
      violations += t.violations.at(monitor);
      if (t.violations.at(monitor) && first.empty()) first = t.first_problem;
    }
  Verdict v;
  v.pass = violations <= kAllowedFailures && checks > 0;
  std::ostringstream d;
  d << monitor << " over " << games << " avoider traces: " << checks << " gated checks, " << violations
    << " violations";
  if (!first.empty()) d << "; first " << first;
  v.detail = d.str();
  return v;
}

// ------------------------------------------------------------- criterion 8

std::optional<GameGraph> random_cubic(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    GameGraph g(n, 3);
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      simple = g.is_legal(stubs[i], stubs[i + 1]);
      if (simple) g.insert(MoveEdge(stubs[i], stubs[i + 1]));
    }
    if (simple) return g;
  }
  return std::nullopt;
}

Verdict pairing_property() {
  std::mt19937_64 rng(8);
  int tested = 0, failures = 0;
  std::map<int, int> by_adjacency;
  while (tested < kPairingSamples) {
    const int n = 4 + 2 * static_cast<int>(rng() % ((kPairingMaxN - 4) / 2 + 1));
    auto cubic = random_cubic(rng, n);
    if (!cubic) continue;
    auto edges = cubic->edges();
    const MoveEdge a = edges[rng() % edges.size()], b = edges[rng() % edges.size()];
    if (a.touches(b.u) || a.touches(b.v)) continue;
    GameGraph g = *cubic;
    g.erase(a);
    g.erase(b);
    auto comps = components(g);
    for (const auto& comp : comps) {
      std::vector<Vertex> four;
      for (Vertex v : comp)
        if (g.degree(v) == 2) four.push_back(v);
      if (four.size() != 4) continue;
      std::shuffle(four.begin(), four.end(), rng);
      int adj = 0;
      for (int i = 1; i < 4; ++i) adj += g.adjacent(four[0], four[i]);
      ++by_adjacency[adj];
      ++tested;
      try {
        auto [uv, pq] = pair_four_degree2(g, comp, four);
        std::vector<Vertex> used{uv.u, uv.v, pq.u, pq.v}, want = four;
        std::sort(used.begin(), used.end());
        std::sort(want.begin(), want.end());
        if (g.adjacent(uv.u, uv.v) || g.adjacent(pq.u, pq.v) || used != want) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  Verdict v;
  v.pass = failures == 0;
  std::ostringstream d;
  d << tested << " components (cubic minus two disjoint edges, <=" << kPairingMaxN
    << " vertices; first vertex adjacent to 0/1/2 others: " << by_adjacency[0] << '/' << by_adjacency[1] << '/'
    << by_adjacency[2] << "): " << failures << " invalid pairings";
  v.detail = d.str();
  return v;
}

// ------------------------------------------------------------ criterion 10

Verdict reproducibility(const std::map<std::string, RunTally>& first_pass, const AvoiderRuns& runs) {
  Verdict v;
  std::ostringstream d;
  // Second pass over every acceptance configuration; digests must match.
  int configs = 0, mismatched = 0;
  std::size_t replay_failures = 0, violations = 0;
  for (const auto& [name, t] : first_pass) {
    (void)name;
    replay_failures += t.replay_failures;
    violations += t.violation_total();
  }
  for (const auto* group : {&runs.random, &runs.greedy})
    for (const auto& [n, t] : *group) {
      replay_failures += t.replay_failures;
      violations += t.violation_total();
    }
  for (int k : {4, 5})
    for (int n : kBuilderSizes) {
      ++configs;
      if (run_config(builder_config(n, k), false).digest != first_pass.at("b" + std::to_string(k) + "-" + std::to_string(n)).digest)
        ++mismatched;
    }
  for (const auto& [label, group, kind] :
       {std::tuple{"random", &runs.random, OpponentKind::Random}, std::tuple{"greedy", &runs.greedy, OpponentKind::Greedy}}) {
    (void)label;
    for (int n : kAvoiderSizes) {
      ++configs;
      if (run_config(avoider_config(n, kind), false).digest != group->at(n).digest) ++mismatched;
    }
  }

  // Byte comparison of two trace files written from separate runs.
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("degree_game_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string bytes[2];
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path file = dir / ("run" + std::to_string(pass) + ".jsonl");
    {
      std::ofstream out(file, std::ios::binary);
      for (int seed = 0; seed < 100; ++seed) {
        GameConfig c = avoider_config(30, OpponentKind::Random);
        c.seed = static_cast<std::uint64_t>(seed);
        write_trace(out, run_game(c));
      }
    }
    std::ifstream in(file, std::ios::binary);
    bytes[pass].assign(std::istreambuf_iterator<char>(in), {});
  }
  fs::remove_all(dir);
  const bool files_equal = !bytes[0].empty() && bytes[0] == bytes[1];

  v.pass = mismatched == 0 && files_equal && replay_failures == 0 && violations == 0;
  d << configs - mismatched << '/' << configs << " configurations reproduce identical trace streams, trace files "
    << (files_equal ? "byte-identical" : "DIFFER") << "; check-trace on every acceptance trace: " << replay_failures
    << " replay failures, " << violations << " monitor violations";
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto run = [&](int id, const std::function<Verdict()>& f) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = f();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    report(id, v, since(start));
    all = all && v.pass;
  };

  std::map<std::string, RunTally> builder_runs;
  AvoiderRuns avoider_runs;

  run(1, exhaustive_builder);
  run(2, [&] { return random_builder(builder_runs); });
  run(3, [&] { return random_avoider(avoider_runs); });
  run(4, [&] { return greedy_avoider(avoider_runs); });
  run(5, solver_ground_truth);
  run(6, witness_soundness);
  run(7, [&] { return monitor_over_avoider_runs(avoider_runs, "freedom_budget"); });
  run(8, pairing_property);
  run(9, [&] { return monitor_over_avoider_runs(avoider_runs, "no_type_y"); });
  run(10, [&] { return reproducibility(builder_runs, avoider_runs); });

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
