#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degree_game/graph.hpp"

namespace degree_game {

enum class Label { TypeH, TypeA, TypeB, TypeX, TypeY, ThreeRegular, Other };

std::string_view to_string(Label label);

/// Shape of a component or of the whole position.
///
/// Evidence ordering per label:
///   TypeH  {u, v}     the adjacent degree-2 vertices
///   TypeB  {p, q, x}  p ~ q adjacent, x the third degree-2 vertex
///   TypeX  {a, b}     the degree-1 vertices
///   TypeY  {a, b}     a of degree 1, b of degree 2
///   TypeA  {a, b, p1, q1, p2, q2, ...}  the single edge, then one pair per component
///   Other with `split_pair` set: {p, q} non-adjacent degree-2 vertices (the
///   building block of type A)
struct TypeLabel {
  Label label = Label::Other;
  std::vector<Vertex> evidence;
  bool split_pair = false;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Degree census of a vertex set: vertices of degree 1 and 2 (sorted).
struct Census {
  std::vector<Vertex> degree1;
  std::vector<Vertex> degree2;
  int other_deficient = 0;  // degree 0 or above 3
};

Census census(const GameGraph& g, std::span<const Vertex> vertices);

/// Throws Error(NotAComponent) unless `comp` is exactly one connected component.
TypeLabel classify_component(const GameGraph& g, std::span<const Vertex> comp);

struct TypeAResult {
  bool holds = false;
  std::vector<Vertex> evidence;  // {a, b, p1, q1, ...}
};

TypeAResult classify_graph_typeA(const GameGraph& g);

enum class AvoiderRow {
  Small,
  RowA,
  RowB,
  RowC,
  RowD,
  RowE,
  RowF,
  WitnessAlready,
  Impossible1,
  Impossible2,
  Impossible3,
};

std::string_view to_string(AvoiderRow row);

/// Classification of the tracked component C at the avoider's turn.
///
/// `bindings` by row:
///   RowA {a, b}        two degree-1 vertices
///   RowB {w, u, v}     w of degree 1 with w ~ u, w !~ v
///   RowC {u}           the degree-1 vertex
///   RowE/RowF {u, v}   the adjacent degree-2 pair of the type-H component
struct AvoiderState {
  AvoiderRow row = AvoiderRow::Small;
  std::vector<Vertex> bindings;
  Census census;
  int e_of_rest = 0;
};

AvoiderState classify_avoider_state(const ComponentView& view, const GameGraph& g);

}  // namespace degree_game
