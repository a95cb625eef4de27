#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degree_game/error.hpp"

namespace degree_game {

using Vertex = int;

// Degree used by the k = 3 structural predicates (freedom, witnesses, types).
inline constexpr int kCubic = 3;

/// An undirected edge, stored with u < v.
struct MoveEdge {
  Vertex u = 0;
  Vertex v = 0;

  MoveEdge() = default;
  MoveEdge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const MoveEdge&, const MoveEdge&) = default;
};

std::string to_string(const MoveEdge& e);

/// Simple undirected graph on the fixed vertex pool 0..n-1 with a degree cap.
///
/// Neighbor lists are kept sorted. Copies are cheap for the graph sizes the
/// game is played on, so operations that "add" an edge return a new value.
class GameGraph {
 public:
  GameGraph() = default;
  GameGraph(int n, int k);

  static GameGraph from_edges(int n, int k, std::span<const MoveEdge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex a, Vertex b) const;
  bool in_range(Vertex v) const { return v >= 0 && v < n_; }
  bool is_isolated(Vertex v) const { return adj_[v].empty(); }
  int edge_count() const { return edge_count_; }

  /// Sorted edge list (u < v, lexicographic).
  std::vector<MoveEdge> edges() const;

  /// Reason `m` is not a legal move, if any.
  std::optional<ErrorCode> check_move(const MoveEdge& m) const;
  std::optional<ErrorCode> check_move(Vertex a, Vertex b) const;
  bool is_legal(Vertex a, Vertex b) const { return !check_move(a, b).has_value(); }

  /// In-place insertion; throws Error on an illegal move.
  void insert(const MoveEdge& m);

  /// Removes an existing edge. Only for search code that probes a move and
  /// undoes it; game play never removes edges.
  void erase(const MoveEdge& m);

  friend bool operator==(const GameGraph&, const GameGraph&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

GameGraph add_edge(const GameGraph& g, const MoveEdge& m);

/// All legal moves in lexicographic order; empty iff the game is over.
std::vector<MoveEdge> legal_moves(const GameGraph& g);
bool has_legal_move(const GameGraph& g);

/// Connected components containing at least one edge, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<Vertex>> components(const GameGraph& g);

/// Component label per vertex (-1 for isolated vertices), indices matching
/// `components(g)`.
std::vector<int> component_index(const GameGraph& g);

std::vector<Vertex> isolated_vertices(const GameGraph& g);
std::optional<Vertex> lowest_isolated(const GameGraph& g, std::span<const Vertex> exclude = {});

struct ComponentView {
  Vertex root_x = 0;
  std::vector<Vertex> c_vertices;
  std::vector<std::vector<Vertex>> d_components;
  std::vector<Vertex> isolated;

  bool in_c(Vertex v) const;
};

ComponentView component_view(const GameGraph& g, Vertex root_x);

struct FreedomStats {
  int f = 0;
  int e = 0;

  friend bool operator==(const FreedomStats&, const FreedomStats&) = default;
};

/// F = sum of (3 - deg) over `vertices`; E = F - 2 per connected piece.
FreedomStats freedom(const GameGraph& g, std::span<const Vertex> vertices);

/// E summed over the D components of a view (isolated vertices excluded).
int effective_freedom_of_rest(const GameGraph& g, const ComponentView& view);

/// Direct check of the definition: some component S of G - x has every vertex
/// of degree 3 in G and receives one or two edges from x.
bool is_eventual_cut_vertex(const GameGraph& g, Vertex x);

enum class WitnessKind { None, EventualCutVertex, ThreeRegularComponent };

std::string_view to_string(WitnessKind kind);

struct WitnessReport {
  WitnessKind kind = WitnessKind::None;
  Vertex vertex = -1;            // the cut vertex, or the smallest vertex of the component
  std::vector<Vertex> structure;  // S for a cut vertex, the component otherwise

  explicit operator bool() const { return kind != WitnessKind::None; }
};

/// Certificate that no completion under cap 3 can be Hamiltonian: an eventual
/// cut vertex x with a vertex outside S + x, or a 3-regular proper component.
WitnessReport has_witness(const GameGraph& g);

/// Same as has_witness but only inspects the component containing `v`.
WitnessReport witness_in_component(const GameGraph& g, Vertex v);

}  // namespace degree_game
