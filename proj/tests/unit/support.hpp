#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "degree_game/graph.hpp"

namespace test_support {

inline degree_game::GameGraph graph_of(int n, int k, std::initializer_list<std::pair<int, int>> edges) {
  degree_game::GameGraph g(n, k);
  for (auto [u, v] : edges) g.insert(degree_game::MoveEdge(u, v));
  return g;
}

// A position reached by random legal play, stopped at a random length.
inline degree_game::GameGraph random_position(std::mt19937_64& rng, int n, int k) {
  degree_game::GameGraph g(n, k);
  const int stop = static_cast<int>(rng() % (n * k / 2 + 2));
  for (int i = 0; i < stop; ++i) {
    auto moves = degree_game::legal_moves(g);
    if (moves.empty()) break;
    g.insert(moves[rng() % moves.size()]);
  }
  return g;
}

}  // namespace test_support

#include <string>
#include <unordered_set>
#include <vector>

#include "degree_game/oracle.hpp"

namespace test_support {

// One representative per isomorphism class of graphs on n vertices with
// maximum degree at most k, grown edge by edge from the empty graph.
inline std::vector<degree_game::GameGraph> all_graphs(int n, int k) {
  using degree_game::GameGraph;
  std::vector<GameGraph> out{GameGraph(n, k)};
  std::unordered_set<std::string> seen{degree_game::canonical_key(out[0], {}, n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& m : degree_game::legal_moves(out[i])) {
      GameGraph h = degree_game::add_edge(out[i], m);
      if (seen.insert(degree_game::canonical_key(h, {}, n)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

inline bool connected(const degree_game::GameGraph& g) {
  return g.n() > 0 && degree_game::components(g).size() == 1 && degree_game::isolated_vertices(g).empty();
}

}  // namespace test_support
