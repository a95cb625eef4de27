#include "degree_game/classify.hpp"

#include <algorithm>

namespace degree_game {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::TypeH: return "TypeH";
    case Label::TypeA: return "TypeA";
    case Label::TypeB: return "TypeB";
    case Label::TypeX: return "TypeX";
    case Label::TypeY: return "TypeY";
    case Label::ThreeRegular: return "ThreeRegular";
    case Label::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(AvoiderRow row) {
  switch (row) {
    case AvoiderRow::Small: return "Small";
    case AvoiderRow::RowA: return "RowA";
    case AvoiderRow::RowB: return "RowB";
    case AvoiderRow::RowC: return "RowC";
    case AvoiderRow::RowD: return "RowD";
    case AvoiderRow::RowE: return "RowE";
    case AvoiderRow::RowF: return "RowF";
    case AvoiderRow::WitnessAlready: return "WitnessAlready";
    case AvoiderRow::Impossible1: return "Impossible1";
    case AvoiderRow::Impossible2: return "Impossible2";
    case AvoiderRow::Impossible3: return "Impossible3";
  }
  return "Small";
}

Census census(const GameGraph& g, std::span<const Vertex> vertices) {
  Census c;
  for (Vertex v : vertices) {
    int d = g.degree(v);
    if (d == 1)
      c.degree1.push_back(v);
    else if (d == 2)
      c.degree2.push_back(v);
    else if (d != kCubic)
      ++c.other_deficient;
  }
  std::sort(c.degree1.begin(), c.degree1.end());
  std::sort(c.degree2.begin(), c.degree2.end());
  return c;
}

namespace {

bool is_component(const GameGraph& g, std::span<const Vertex> comp) {
  if (comp.empty()) return false;
  std::vector<char> member(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : comp) {
    if (!g.in_range(v) || member[v]) return false;
    member[v] = 1;
  }
  for (Vertex v : comp)
    for (Vertex w : g.neighbors(v))
      if (!member[w]) return false;
  FreedomStats fs = freedom(g, comp);
  return fs.e == fs.f - 2;  // exactly one connected piece
}

}  // namespace

TypeLabel classify_component(const GameGraph& g, std::span<const Vertex> comp) {
  if (!is_component(g, comp)) throw Error(ErrorCode::NotAComponent, "vertex set is not a component");
  TypeLabel out;
  Census c = census(g, comp);
  if (c.other_deficient > 0) return out;
  const auto& d1 = c.degree1;
  const auto& d2 = c.degree2;
  if (d1.empty() && d2.empty()) {
    out.label = Label::ThreeRegular;
    return out;
  }
  if (d1.empty() && d2.size() == 2) {
    if (g.adjacent(d2[0], d2[1])) {
      out.label = Label::TypeH;
    } else {
      out.split_pair = true;
    }
    out.evidence = d2;
    return out;
  }
  if (d1.empty() && d2.size() == 3) {
    int adjacent_pairs = 0;
    std::vector<Vertex> ev;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (g.adjacent(d2[i], d2[j])) {
          ++adjacent_pairs;
          ev = {d2[i], d2[j], d2[3 - i - j]};
        }
    if (adjacent_pairs == 1) {
      out.label = Label::TypeB;
      out.evidence = ev;
    }
    return out;
  }
  if (d2.empty() && d1.size() == 2 && !g.adjacent(d1[0], d1[1])) {
    out.label = Label::TypeX;
    out.evidence = d1;
    return out;
  }
  if (d1.size() == 1 && d2.size() == 1 && !g.adjacent(d1[0], d2[0])) {
    out.label = Label::TypeY;
    out.evidence = {d1[0], d2[0]};
    return out;
  }
  return out;
}

TypeAResult classify_graph_typeA(const GameGraph& g) {
  TypeAResult out;
  std::vector<Vertex> edge;
  std::vector<Vertex> pairs;
  int others = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) {
      if (!edge.empty()) return out;
      edge = comp;
      continue;
    }
    TypeLabel l = classify_component(g, comp);
    if (!l.split_pair) return out;
    pairs.insert(pairs.end(), l.evidence.begin(), l.evidence.end());
    ++others;
  }
  if (edge.empty() || others == 0) return out;
  out.holds = true;
  out.evidence = edge;
  out.evidence.insert(out.evidence.end(), pairs.begin(), pairs.end());
  return out;
}

AvoiderState classify_avoider_state(const ComponentView& view, const GameGraph& g) {
  AvoiderState s;
  s.census = census(g, view.c_vertices);
  s.e_of_rest = effective_freedom_of_rest(g, view);
  if (view.c_vertices.size() < 4) {
    s.row = AvoiderRow::Small;
    return s;
  }
  const auto& d1 = s.census.degree1;
  const auto& d2 = s.census.degree2;
  if (d1.empty() && d2.empty()) {
    s.row = AvoiderRow::Impossible1;
    return s;
  }
  if ((d1.size() == 1 && d2.empty()) || (d1.empty() && d2.size() == 1)) {
    s.row = AvoiderRow::Impossible2;
    return s;
  }
  if (d1.size() == 1 && d2.size() == 1 && g.adjacent(d1[0], d2[0])) {
    s.row = AvoiderRow::Impossible3;
    return s;
  }
  if (witness_in_component(g, view.root_x)) {
    s.row = AvoiderRow::WitnessAlready;
    return s;
  }
  if (d1.size() >= 2) {
    s.row = AvoiderRow::RowA;
    s.bindings = {d1[0], d1[1]};
    return s;
  }
  if (d1.size() == 1) {
    Vertex w = d1[0];
    if (d2.size() == 2 && !g.adjacent(d2[0], d2[1])) {
      bool a0 = g.adjacent(w, d2[0]);
      bool a1 = g.adjacent(w, d2[1]);
      if (a0 != a1) {
        s.row = AvoiderRow::RowB;
        s.bindings = a0 ? std::vector<Vertex>{w, d2[0], d2[1]} : std::vector<Vertex>{w, d2[1], d2[0]};
        return s;
      }
    }
    s.row = AvoiderRow::RowC;
    s.bindings = {w};
    return s;
  }
  if (d2.size() == 2 && g.adjacent(d2[0], d2[1])) {
    s.row = s.e_of_rest != 0 ? AvoiderRow::RowE : AvoiderRow::RowF;
    s.bindings = d2;
    return s;
  }
  s.row = AvoiderRow::RowD;
  s.bindings = d2;
  return s;
}

}  // namespace degree_game
