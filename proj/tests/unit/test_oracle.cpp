#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "degree_game/exhaust.hpp"
#include "degree_game/players.hpp"
#include "support.hpp"

using namespace degree_game;
using test_support::all_graphs;
using test_support::graph_of;

namespace {

bool ham_by_permutations(const GameGraph& g) {
  const int n = g.n();
  if (n < 3) return false;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.adjacent(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool connected_without(const GameGraph& g, Vertex removed) {
  std::vector<char> seen(g.n(), 0);
  Vertex start = removed == 0 ? 1 : 0;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (u != removed && !seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.n() - (removed >= 0 ? 1 : 0);
}

bool two_connected_brute(const GameGraph& g) {
  if (g.n() < 3 || !connected_without(g, -1)) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

GameGraph relabel(const GameGraph& g, const std::vector<Vertex>& perm) {
  GameGraph h(g.n(), g.k());
  for (const auto& e : g.edges()) h.insert(MoveEdge(perm[e.u], perm[e.v]));
  return h;
}

bool isomorphic_brute(const GameGraph& a, const GameGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Plain minimax with no memo or cutoffs: does the pursuer win?
bool pursuer_wins_brute(GameGraph& g, bool pursuer_to_move, Objective obj) {
  auto moves = legal_moves(g);
  if (moves.empty()) return objective_holds(g, obj);
  for (const auto& m : moves) {
    g.insert(m);
    bool w = pursuer_wins_brute(g, !pursuer_to_move, obj);
    g.erase(m);
    if (w == pursuer_to_move) return w;
  }
  return !pursuer_to_move;
}

GameGraph petersen() {
  GameGraph g(10, 3);
  for (int i = 0; i < 5; ++i) {
    g.insert(MoveEdge(i, (i + 1) % 5));
    g.insert(MoveEdge(i, i + 5));
    g.insert(MoveEdge(5 + i, 5 + (i + 2) % 5));
  }
  return g;
}

GameGraph cube() {
  GameGraph g(8, 3);
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) g.insert(MoveEdge(v, v ^ bit));
  return g;
}

const Objective kObjectives[] = {Objective::ForceHamiltonian, Objective::AvoidHamiltonian,
                                 Objective::AvoidTwoConnected};

}  // namespace

TEST_CASE("hamilton_cycle examples") {
  GameGraph k4 = graph_of(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto c = hamilton_cycle(k4);
  REQUIRE(c);
  CHECK(c->size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(k4.adjacent((*c)[i], (*c)[(i + 1) % 4]));
  CHECK_FALSE(hamilton_cycle(graph_of(4, 3, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(hamilton_cycle(petersen()));
  CHECK(hamilton_cycle(cube()));
  CHECK_FALSE(hamilton_cycle(graph_of(2, 3, {{0, 1}})));
}

TEST_CASE("hamilton_cycle and 2-connectivity agree with brute force on all small graphs") {
  int graphs = 0;
  for (int k : {3, 4}) {
    for (int n = 1; n <= (k == 3 ? 8 : 7); ++n) {
      for (const GameGraph& g : all_graphs(n, k)) {
        ++graphs;
        auto c = hamilton_cycle(g);
        CHECK(c.has_value() == ham_by_permutations(g));
        if (c) {
          std::vector<Vertex> sorted = *c;
          std::sort(sorted.begin(), sorted.end());
          for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);
          for (int i = 0; i < n; ++i) CHECK(g.adjacent((*c)[i], (*c)[(i + 1) % n]));
        }
        CHECK(is_two_connected(g) == two_connected_brute(g));
        auto cuts = articulation_points(g);
        for (Vertex v : cuts) CHECK_FALSE(connected_without(g, v));
      }
    }
  }
  CHECK(graphs > 1000);
}

TEST_CASE("is_two_connected examples") {
  CHECK(is_two_connected(graph_of(3, 3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_two_connected(graph_of(3, 3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_two_connected(graph_of(6, 3, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("canonical_form examples") {
  GameGraph p1 = graph_of(3, 3, {{0, 1}, {1, 2}});
  GameGraph p2 = graph_of(3, 3, {{2, 0}, {0, 1}});
  GameGraph tri = graph_of(3, 3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_form(p1, Side::Pursuer) == canonical_form(p2, Side::Pursuer));
  CHECK_FALSE(canonical_form(p1, Side::Pursuer) == canonical_form(tri, Side::Pursuer));
  CHECK_FALSE(canonical_form(p1, Side::Pursuer) == canonical_form(p1, Side::Opponent));
  CHECK_FALSE(canonical_key(graph_of(3, 3, {})) == canonical_key(graph_of(3, 4, {})));
  GameGraph c = cube();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(c) == canonical_key(relabel(c, perm)));
  }
  CHECK_THROWS_AS(canonical_key(petersen()), Error);
}

TEST_CASE("canonical keys separate exactly the isomorphism classes") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    auto reps = all_graphs(n, 3);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (reps[i].edge_count() == reps[j].edge_count()) CHECK_FALSE(isomorphic_brute(reps[i], reps[j]));
  }
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 7;
    GameGraph g = test_support::random_position(rng, n, 3);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GameGraph h = relabel(g, perm);
    CHECK(canonical_key(g) == canonical_key(h));
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = static_cast<int>(rng() % 3);
    std::vector<int> moved(n);
    for (int v = 0; v < n; ++v) moved[perm[v]] = colors[v];
    CHECK(canonical_key(g, colors) == canonical_key(h, moved));
  }
}

TEST_CASE("solve examples") {
  for (Side side : {Side::Pursuer, Side::Opponent}) {
    SolveResult f = solve(GameGraph(3, 3), side, Objective::ForceHamiltonian);
    CHECK(f.pursuer_wins);
    CHECK(f.mover_wins == (side == Side::Pursuer));
    SolveResult a = solve(GameGraph(3, 3), side, Objective::AvoidHamiltonian);
    CHECK_FALSE(a.pursuer_wins);
    CHECK(solve(GameGraph(4, 4), side, Objective::ForceHamiltonian).pursuer_wins);
    CHECK(solve(GameGraph(2, 3), side, Objective::AvoidHamiltonian).pursuer_wins);
    CHECK_FALSE(solve(GameGraph(2, 3), side, Objective::ForceHamiltonian).pursuer_wins);
  }
  SolveResult r = solve(GameGraph(3, 3), Side::Pursuer, Objective::ForceHamiltonian);
  REQUIRE(r.principal_move);
  CHECK_FALSE(GameGraph(3, 3).check_move(*r.principal_move).has_value());
  GameGraph k4 = graph_of(4, 3, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(solve(k4, Side::Pursuer, Objective::ForceHamiltonian).principal_move);
  CHECK_THROWS_AS(solve(GameGraph(8, 3), Side::Pursuer, Objective::ForceHamiltonian), Error);
  CHECK_THROWS_AS(solve(GameGraph(7, 4), Side::Pursuer, Objective::ForceHamiltonian), Error);
}

TEST_CASE("solve matches unmemoized minimax on empty boards") {
  for (int k : {3, 4})
    for (int n = 1; n <= 5; ++n)
      for (Objective obj : kObjectives)
        for (Side side : {Side::Pursuer, Side::Opponent}) {
          GameGraph g(n, k);
          const bool brute = pursuer_wins_brute(g, side == Side::Pursuer, obj);
          SolveResult r = solve(GameGraph(n, k), side, obj);
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(to_string(obj));
          CHECK(r.pursuer_wins == brute);
          CHECK(r.mover_wins == (side == Side::Pursuer ? brute : !brute));
        }
}

TEST_CASE("solve is invariant under relabeling and its principal move keeps the value") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 3 + trial % 2;
    const int n = 4 + trial % 3;
    GameGraph g = test_support::random_position(rng, n, k);
    if (!has_legal_move(g)) continue;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Objective obj = kObjectives[trial % 3];
    const Side side = trial % 2 ? Side::Pursuer : Side::Opponent;
    SolveResult a = solve(g, side, obj);
    SolveResult b = solve(relabel(g, perm), side, obj);
    CHECK(a.mover_wins == b.mover_wins);
    REQUIRE(a.principal_move);
    if (a.mover_wins) {
      GameGraph h = add_edge(g, *a.principal_move);
      const Side other = side == Side::Pursuer ? Side::Opponent : Side::Pursuer;
      if (has_legal_move(h))
        CHECK_FALSE(solve(h, other, obj).mover_wins);
      else
        CHECK(objective_holds(h, obj) == (side == Side::Pursuer));
    }
  }
}

TEST_CASE("a solver-driven strategy achieves the solved value under exhaustive play") {
  for (Role role : {Role::Builder, Role::Avoider}) {
    const int k = role == Role::Builder ? 4 : 3;
    for (int n = 3; n <= 5; ++n)
      for (bool first : {true, false}) {
        const Objective obj = objective_for(role);
        SolveResult r = solve(GameGraph(n, k), first ? Side::Pursuer : Side::Opponent, obj);
        ExhaustOptions opt;
        opt.strategy_first = first;
        ExhaustReport rep = exhaust_adversary(Strategy(SolverPlayer(obj)), role, GameGraph(n, k), opt);
        CAPTURE(n);
        CAPTURE(first);
        CHECK(rep.errors == 0);
        CHECK(rep.universal_success() == r.pursuer_wins);
      }
  }
}

TEST_CASE("exhaust reports the forced triangle against the avoider on three vertices") {
  ExhaustReport r = exhaust_adversary(make_strategy(Role::Avoider), Role::Avoider, GameGraph(3, 3));
  CHECK(r.lines == 2);
  CHECK(r.failures == 2);
  CHECK(r.successes == 0);
  CHECK(r.errors == 0);
  CHECK_FALSE(r.universal_success());
  CHECK_THROWS_AS(exhaust_adversary(make_strategy(Role::Avoider), Role::Avoider, GameGraph(9, 3)), Error);

  ExhaustOptions capped;
  capped.max_nodes = 10;
  ExhaustReport t = exhaust_adversary(make_strategy(Role::Builder), Role::Builder, GameGraph(6, 4), capped);
  CHECK(t.truncated);
  CHECK_FALSE(t.universal_success());
}
