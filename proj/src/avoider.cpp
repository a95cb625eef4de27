#include "degree_game/avoider.hpp"

#include <algorithm>

namespace degree_game {

std::string_view to_string(AvoiderPhase phase) {
  switch (phase) {
    case AvoiderPhase::Main: return "Main";
    case AvoiderPhase::TypeHAttach: return "TypeHAttach";
    case AvoiderPhase::TypeHReact: return "TypeHReact";
    case AvoiderPhase::TreeAvoiderFirst: return "TreeAvoiderFirst";
    case AvoiderPhase::TreeOpponentFirst: return "TreeOpponentFirst";
    case AvoiderPhase::TypeAEnd: return "TypeAEnd";
    case AvoiderPhase::TypeBEnd: return "TypeBEnd";
    case AvoiderPhase::WitnessHold: return "WitnessHold";
  }
  return "Main";
}

Vertex AvoiderPlan::at(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end())
    throw Error(ErrorCode::UnmatchedPosition, "plan has no binding '" + name + "'");
  return it->second;
}

namespace {

[[noreturn]] void unmatched(const std::string& what) {
  throw Error(ErrorCode::UnmatchedPosition, what);
}

StrategyDecision mandated(const GameGraph& g, Vertex a, Vertex b, std::string rule) {
  if (auto err = g.check_move(a, b))
    throw Error(ErrorCode::StrategyBreak, "mandated move " + to_string(MoveEdge(a, b)) + " (" +
                                              rule + ") is illegal: " +
                                              std::string(to_string(*err)));
  return {MoveEdge(a, b), std::move(rule), false};
}

Vertex require_isolated(const GameGraph& g, const std::string& rule) {
  auto v = lowest_isolated(g);
  if (!v) throw Error(ErrorCode::StrategyBreak, rule + ": no isolated vertex left");
  return *v;
}

std::vector<Vertex> component_of(const GameGraph& g, Vertex s) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> out{s}, stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The single degree-2 vertex of s's component other than s.
Vertex other_degree2(const GameGraph& g, Vertex s) {
  std::vector<Vertex> found;
  for (Vertex v : component_of(g, s))
    if (v != s && g.degree(v) == 2) found.push_back(v);
  if (found.size() != 1) unmatched("expected one other degree-2 vertex near " + std::to_string(s));
  return found.front();
}

// y was isolated before the opponent's move.
bool fresh(const GameGraph& g, const MoveEdge& opp, Vertex y) {
  return opp.touches(y) && g.degree(y) == 1;
}

bool is_fresh_pair(const GameGraph& g, const MoveEdge& opp) {
  return fresh(g, opp, opp.u) && fresh(g, opp, opp.v);
}

// The table asked for an isolated vertex on a board that has none left.
bool pool_exhausted(const GameGraph& g, const Error& e) {
  return e.code() == ErrorCode::StrategyBreak && !lowest_isolated(g);
}

StrategyDecision witness_hold(const GameGraph& g, const WitnessReport& w) {
  const Vertex avoid = w.kind == WitnessKind::EventualCutVertex ? w.vertex : -1;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (u != avoid && v != avoid && g.is_legal(u, v)) return {MoveEdge(u, v), "witness-hold", false};
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.is_legal(u, v)) return {MoveEdge(u, v), "witness-hold", false};
  throw Error(ErrorCode::NoLegalMove, "no legal move left");
}

// ---- main table ------------------------------------------------------------

StrategyDecision small_move(const ComponentView& view, const GameGraph& g) {
  Vertex best = -1;
  for (Vertex v : view.c_vertices)
    if (g.degree(v) < kCubic && (best < 0 || g.degree(v) < g.degree(best))) best = v;
  if (best < 0) throw Error(ErrorCode::StrategyBreak, "avoider-small: C is saturated");
  Vertex iso = require_isolated(g, "avoider-small");
  return mandated(g, best, iso, "avoider-small");
}

StrategyDecision row_c_move(const GameGraph& g, const AvoiderState& s) {
  const Vertex u = s.bindings.at(0);
  const auto& d2 = s.census.degree2;
  if (d2.size() == 2) {
    Vertex v = d2[0], w = d2[1];
    if (!g.adjacent(u, v) && !g.adjacent(u, w)) return mandated(g, u, v, "avoider-row-c");
    if (g.adjacent(u, w)) std::swap(v, w);  // now u ~ v
    if (!g.adjacent(v, w)) return mandated(g, v, w, "avoider-row-c-refined");
    return mandated(g, u, w, "avoider-row-c-refined");
  }
  for (Vertex v : d2)
    if (!g.adjacent(u, v)) return mandated(g, u, v, "avoider-row-c");
  for (Vertex v : d2)
    if (g.is_legal(u, v)) return mandated(g, u, v, "avoider-row-c");
  throw Error(ErrorCode::StrategyBreak, "avoider-row-c: no degree-2 partner for " + std::to_string(u));
}

StrategyDecision row_d_move(const ComponentView& view, const GameGraph& g, const AvoiderState& s) {
  const auto& d2 = s.census.degree2;
  if (d2.size() == 4) {
    auto [first, second] = pair_four_degree2(g, view.c_vertices, d2);
    (void)second;
    return mandated(g, first.u, first.v, "avoider-row-d-pairing");
  }
  std::optional<MoveEdge> lowest;
  for (std::size_t i = 0; i < d2.size(); ++i)
    for (std::size_t j = i + 1; j < d2.size(); ++j) {
      if (g.adjacent(d2[i], d2[j])) continue;
      if (!lowest) lowest = MoveEdge(d2[i], d2[j]);
      if (d2.size() <= 3) return mandated(g, d2[i], d2[j], "avoider-row-d");
      bool clean = true;
      for (std::size_t a = 0; a < d2.size() && clean; ++a)
        for (std::size_t b = a + 1; b < d2.size() && clean; ++b) {
          if (a == i || a == j || b == i || b == j) continue;
          if (g.adjacent(d2[a], d2[b])) clean = false;
        }
      if (clean) return mandated(g, d2[i], d2[j], "avoider-row-d");
    }
  if (!lowest) throw Error(ErrorCode::StrategyBreak, "avoider-row-d: no non-adjacent degree-2 pair");
  auto d = mandated(g, lowest->u, lowest->v, "avoider-row-d-gap");
  d.gap = true;
  return d;
}

StrategyDecision row_e_move(const ComponentView& view, const GameGraph& g, const AvoiderState& s) {
  const Vertex u = s.bindings.at(0);
  std::optional<Vertex> target;
  for (int want : {2, 1}) {
    for (const auto& comp : view.d_components)
      for (Vertex v : comp)
        if (g.degree(v) == want && (!target || v < *target)) target = v;
    if (target) break;
  }
  if (!target) throw Error(ErrorCode::StrategyBreak, "avoider-row-e: D has no free vertex");
  return mandated(g, u, *target, "avoider-row-e");
}

StrategyDecision tree_root(AvoiderPlan& plan, const GameGraph& g, Vertex a, Vertex b,
                           const std::string& rule) {
  const Vertex v = std::min(a, b), u = std::max(a, b);
  const Vertex x = require_isolated(g, rule);
  plan.phase = AvoiderPhase::TreeAvoiderFirst;
  plan.node = 1;
  plan.bindings = {{"u", u}, {"v", v}, {"x", x}};
  return mandated(g, v, x, rule);
}

StrategyDecision row_f_move(AvoiderPlan& plan, const ComponentView& view, const GameGraph& g,
                            const AvoiderState& s) {
  const Vertex v = s.bindings.at(0), w = s.bindings.at(1);
  for (const auto& comp : view.d_components) {
    Census c = census(g, comp);
    if (c.degree2.size() == 2 && c.degree1.empty()) {
      plan.phase = AvoiderPhase::TypeHAttach;
      plan.node = -1;
      plan.bindings = {{"w", w}, {"q", c.degree2[1]}};
      return mandated(g, v, c.degree2[0], "typeh-p2-attach");
    }
  }
  if (!view.d_components.empty())
    throw Error(ErrorCode::StrategyBreak, "typeh-p2-attach: no D component with a degree-2 pair");
  return tree_root(plan, g, v, w, "tree-p2-node-0");
}

StrategyDecision main_move(AvoiderPlan& plan, const ComponentView& view, const GameGraph& g) {
  AvoiderState s = classify_avoider_state(view, g);
  switch (s.row) {
    case AvoiderRow::Small: return small_move(view, g);
    case AvoiderRow::RowA: return mandated(g, s.bindings[0], s.bindings[1], "avoider-row-a");
    case AvoiderRow::RowB: return mandated(g, s.bindings[0], s.bindings[2], "avoider-row-b");
    case AvoiderRow::RowC: return row_c_move(g, s);
    case AvoiderRow::RowD: return row_d_move(view, g, s);
    case AvoiderRow::RowE: return row_e_move(view, g, s);
    case AvoiderRow::RowF: return row_f_move(plan, view, g, s);
    case AvoiderRow::WitnessAlready:
    case AvoiderRow::Impossible1:
    case AvoiderRow::Impossible2:
    case AvoiderRow::Impossible3: {
      plan.phase = AvoiderPhase::WitnessHold;
      WitnessReport w = has_witness(g);
      auto d = witness_hold(g, w);
      d.rule = "avoider-" + std::string(to_string(s.row)) + "-hold";
      return d;
    }
  }
  throw Error(ErrorCode::StrategyBreak, "unclassified position");
}

// ---- phase handlers ---------------------------------------------------------

StrategyDecision attach_followup(AvoiderPlan& plan, const GameGraph& g, const MoveEdge& opp) {
  const Vertex w = plan.at("w"), q = plan.at("q");
  plan.phase = AvoiderPhase::Main;
  if (!opp.touches(w) && !opp.touches(q)) return mandated(g, w, q, "typeh-attach-close");
  const Vertex hit = opp.touches(w) ? w : q;
  const Vertex other = hit == w ? q : w;
  const Vertex a = opp.other(hit);
  if (g.degree(a) <= 2) return mandated(g, other, a, "typeh-attach-cut");
  return mandated(g, other, other_degree2(g, other), "typeh-attach-mirror");
}

StrategyDecision react_to_opponent(AvoiderPlan& plan, const GameGraph& g, const MoveEdge& opp) {
  const Vertex v = plan.at("v"), w = plan.at("w");
  const int m = plan.at("m");
  auto partner = [&](Vertex s) -> std::optional<Vertex> {
    if (s == v) return w;
    if (s == w) return v;
    for (int i = 0; i < m; ++i) {
      Vertex p = plan.at("p" + std::to_string(i)), q = plan.at("q" + std::to_string(i));
      if (s == p) return q;
      if (s == q) return p;
    }
    return std::nullopt;
  };
  auto in_c = [&](Vertex s) { return s == v || s == w; };
  plan.phase = AvoiderPhase::Main;
  auto pu = partner(opp.u), pv = partner(opp.v);
  if (pu && *pu == opp.v) {
    auto iso = isolated_vertices(g);
    if (iso.size() < 2) unmatched("no isolated pair left");
    return mandated(g, iso[0], iso[1], "typeh-p1-c");
  }
  if (pu && pv) {
    const char* rule = in_c(opp.u) || in_c(opp.v) ? "typeh-p1-b" : "typeh-p1-a";
    return mandated(g, *pu, *pv, rule);
  }
  if (pu || pv) {
    const Vertex s = pu ? opp.u : opp.v, x = opp.other(s);
    if (!fresh(g, opp, x)) unmatched("opponent move leaves the tracked pairs");
    return mandated(g, *partner(s), x, in_c(s) ? "typeh-p1-d" : "typeh-p1-e");
  }
  if (!is_fresh_pair(g, opp)) unmatched("opponent move outside the type-H picture");
  if (m > 0) {
    const Vertex p = plan.at("p0"), q = plan.at("q0");
    plan.phase = AvoiderPhase::TypeAEnd;
    plan.bindings = {{"p", w}, {"q", q}, {"a", opp.u}, {"b", opp.v}};
    return mandated(g, v, p, "typeh-p1-f");
  }
  plan.phase = AvoiderPhase::TreeOpponentFirst;
  plan.node = 1;
  plan.bindings = {{"u", w}, {"v", v}, {"x", opp.u}, {"y", opp.v}};
  return mandated(g, v, opp.u, "tree-p1-node-0");
}

StrategyDecision enter_typeA(AvoiderPlan& plan, const GameGraph& g, Vertex p, Vertex q, Vertex a,
                             Vertex b, Vertex m1, Vertex m2, const std::string& rule) {
  plan.phase = AvoiderPhase::TypeAEnd;
  plan.node = -1;
  plan.bindings = {{"p", p}, {"q", q}, {"a", a}, {"b", b}};
  return mandated(g, m1, m2, rule);
}

StrategyDecision enter_typeB(AvoiderPlan& plan, const GameGraph& g, Vertex p, Vertex q, Vertex x,
                             Vertex m1, Vertex m2, const std::string& rule) {
  plan.phase = AvoiderPhase::TypeBEnd;
  plan.node = 0;
  plan.bindings = {{"p", p}, {"q", q}, {"x", x}};
  return mandated(g, m1, m2, rule);
}

StrategyDecision tree_avoider_first(AvoiderPlan& plan, const GameGraph& g, const MoveEdge& opp) {
  switch (plan.node) {
    case 1: {
      const Vertex u = plan.at("u"), x = plan.at("x");
      if (!opp.touches(u) || !fresh(g, opp, opp.other(u))) unmatched("tree node 1");
      const Vertex c = require_isolated(g, "tree-p2-node-1");
      plan.node = 2;
      plan.bindings = {{"a", opp.other(u)}, {"b", x}, {"c", c}};
      return mandated(g, x, c, "tree-p2-node-1");
    }
    case 2: {
      const Vertex a = plan.at("a"), b = plan.at("b"), c = plan.at("c");
      if (opp.touches(c) && fresh(g, opp, opp.other(c))) {
        const Vertex d = opp.other(c);
        plan.node = 3;
        plan.bindings = {{"r", a}, {"s", c}, {"t", d}};
        return mandated(g, b, d, "tree-p2-node-2a");
      }
      if (opp.touches(a) && fresh(g, opp, opp.other(a))) {
        const Vertex d = opp.other(a);
        plan.node = 3;
        plan.bindings = {{"r", d}, {"s", b}, {"t", c}};
        return mandated(g, a, c, "tree-p2-node-2b");
      }
      if (opp.touches(b) && fresh(g, opp, opp.other(b))) {
        const Vertex d = opp.other(b);
        plan.node = 3;
        plan.bindings = {{"r", a}, {"s", c}, {"t", d}};
        return mandated(g, c, d, "tree-p2-node-2c");
      }
      if (is_fresh_pair(g, opp)) {
        plan.node = 4;
        plan.bindings = {{"e1", a}, {"e2", b}, {"c", c}, {"d", opp.u}, {"e", opp.v}};
        return mandated(g, a, c, "tree-p2-node-2d");
      }
      unmatched("tree node 2");
    }
    case 3: {
      const Vertex r = plan.at("r"), s = plan.at("s"), t = plan.at("t");
      if (is_fresh_pair(g, opp))
        return enter_typeA(plan, g, r, t, opp.u, opp.v, r, s, "tree-p2-node-3a");
      if (opp.touches(r) && fresh(g, opp, opp.other(r))) {
        const Vertex y = opp.other(r);
        return enter_typeB(plan, g, r, y, t, s, y, "tree-p2-node-3b");
      }
      for (Vertex hit : {s, t})
        if (opp.touches(hit) && fresh(g, opp, opp.other(hit))) {
          const Vertex y = opp.other(hit);
          return enter_typeB(plan, g, r, y, hit == s ? t : s, r, y, "tree-p2-node-3c");
        }
      unmatched("tree node 3");
    }
    case 4: {
      const Vertex e1 = plan.at("e1"), e2 = plan.at("e2"), c = plan.at("c");
      const Vertex d = plan.at("d"), e = plan.at("e");
      for (Vertex end : {e1, e2}) {
        if (!opp.touches(end)) continue;
        const Vertex far = end == e1 ? e2 : e1;
        const Vertex hit = opp.other(end);
        if (hit == d || hit == e)
          return enter_typeB(plan, g, d, e, far, c, hit == d ? e : d, "tree-p2-node-4a");
        if (fresh(g, opp, hit)) return enter_typeA(plan, g, far, hit, d, e, c, hit, "tree-p2-node-4b");
      }
      unmatched("tree node 4");
    }
    default: unmatched("unknown tree node");
  }
}

StrategyDecision tree_opponent_first(AvoiderPlan& plan, const GameGraph& g, const MoveEdge& opp) {
  const Vertex u = plan.at("u"), x = plan.at("x"), y = plan.at("y");
  if (opp.touches(u) && opp.other(u) != y && fresh(g, opp, opp.other(u))) {
    plan.phase = AvoiderPhase::Main;
    plan.bindings.clear();
    plan.node = -1;
    return mandated(g, y, opp.other(u), "tree-p1-node-1a");
  }
  if (opp.touches(x) && fresh(g, opp, opp.other(x))) {
    const Vertex z = opp.other(x);
    return enter_typeB(plan, g, y, z, u, y, z, "tree-p1-node-1b");
  }
  if (opp == MoveEdge(u, y)) return tree_root(plan, g, x, y, "tree-p1-node-1c");
  unmatched("tree node after the isolated pair");
}

StrategyDecision typeA_end_move(AvoiderPlan& plan, const GameGraph& g, const std::optional<MoveEdge>& opp) {
  const Vertex p = plan.at("p"), q = plan.at("q");
  plan.phase = AvoiderPhase::Main;
  plan.bindings.clear();
  if (!opp || (!opp->touches(p) && !opp->touches(q))) return mandated(g, p, q, "typeA-end-close");
  const Vertex hit = opp->touches(p) ? p : q;
  const Vertex other = hit == p ? q : p;
  const Vertex v = opp->other(hit);
  if (g.degree(v) <= 2) return mandated(g, other, v, "typeA-end-cut");
  return mandated(g, other, other_degree2(g, other), "typeA-end-mirror");
}

StrategyDecision typeB_end_move(AvoiderPlan& plan, const GameGraph& g, const std::optional<MoveEdge>& opp) {
  if (plan.node == 0) {
    const Vertex p = plan.at("p"), q = plan.at("q"), x = plan.at("x");
    if (opp && opp->touches(x) && fresh(g, *opp, opp->other(x))) {
      const Vertex y = opp->other(x);
      plan.node = 1;
      plan.bindings = {{"q", q}, {"y", y}};
      return mandated(g, y, p, "typeB-step2");
    }
    plan.phase = AvoiderPhase::Main;
    plan.bindings.clear();
    plan.node = -1;
    if (g.is_legal(p, x)) return mandated(g, p, x, "typeB-step1");
    if (g.is_legal(q, x)) return mandated(g, q, x, "typeB-step1");
    unmatched("type B: neither end can reach the third vertex");
  }
  const Vertex q = plan.at("q"), y = plan.at("y");
  plan.phase = AvoiderPhase::Main;
  plan.bindings.clear();
  plan.node = -1;
  if (opp && opp->touches(q) && fresh(g, *opp, opp->other(q)))
    return mandated(g, y, opp->other(q), "typeB-step3");
  if (opp && opp->touches(y) && fresh(g, *opp, opp->other(y)))
    return mandated(g, q, opp->other(y), "typeB-step3");
  if (!opp || (!opp->touches(q) && !opp->touches(y))) return mandated(g, q, y, "typeB-step3");
  unmatched("type B step 3");
}

StrategyDecision phase_move(AvoiderPlan& plan, const GameGraph& g, const std::optional<MoveEdge>& opp) {
  switch (plan.phase) {
    case AvoiderPhase::TypeAEnd: return typeA_end_move(plan, g, opp);
    case AvoiderPhase::TypeBEnd: return typeB_end_move(plan, g, opp);
    default: break;
  }
  if (!opp) unmatched("phase expects an opponent move");
  switch (plan.phase) {
    case AvoiderPhase::TypeHAttach: return attach_followup(plan, g, *opp);
    case AvoiderPhase::TypeHReact: return react_to_opponent(plan, g, *opp);
    case AvoiderPhase::TreeAvoiderFirst: return tree_avoider_first(plan, g, *opp);
    case AvoiderPhase::TreeOpponentFirst: return tree_opponent_first(plan, g, *opp);
    default: unmatched("no handler for phase");
  }
}

// After the avoider's move: is C type H with E(D) = 0 and every D component a
// degree-2 pair?
void mark_type_h(AvoiderPlan& plan, const GameGraph& after) {
  ComponentView view = component_view(after, plan.root_x);
  if (view.c_vertices.size() < 4) return;
  TypeLabel label = classify_component(after, view.c_vertices);
  if (label.label != Label::TypeH) return;
  if (effective_freedom_of_rest(after, view) != 0) return;
  std::map<std::string, Vertex> b{{"v", label.evidence[0]}, {"w", label.evidence[1]}};
  int m = 0;
  for (const auto& comp : view.d_components) {
    Census c = census(after, comp);
    if (c.degree2.size() != 2 || !c.degree1.empty()) return;
    b["p" + std::to_string(m)] = c.degree2[0];
    b["q" + std::to_string(m)] = c.degree2[1];
    ++m;
  }
  b["m"] = m;
  plan.phase = AvoiderPhase::TypeHReact;
  plan.node = -1;
  plan.bindings = std::move(b);
}

}  // namespace

bool creates_witness(const GameGraph& g, const MoveEdge& e) {
  if (!g.is_legal(e.u, e.v)) return false;
  GameGraph h = g;
  h.insert(e);
  return static_cast<bool>(witness_in_component(h, e.u));
}

std::optional<MoveEdge> find_witness_move(const GameGraph& g) {
  std::vector<MoveEdge> candidates;
  auto iso = lowest_isolated(g);
  for (Vertex a = 0; a < g.n(); ++a) {
    if (g.degree(a) != 2) continue;
    for (Vertex b = 0; b < g.n(); ++b) {
      if (b == a || (g.is_isolated(b) && b != iso) || !g.is_legal(a, b)) continue;
      candidates.emplace_back(a, b);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  GameGraph h = g;
  for (const auto& e : candidates) {
    h.insert(e);
    bool hit = static_cast<bool>(witness_in_component(h, e.u));
    h.erase(e);
    if (hit) return e;
  }
  return std::nullopt;
}

std::pair<MoveEdge, MoveEdge> pair_four_degree2(const GameGraph& g, std::span<const Vertex> comp,
                                                std::span<const Vertex> four) {
  if (four.size() != 4) throw Error(ErrorCode::InvalidConfig, "pairing needs exactly four vertices");
  std::vector<Vertex> f(four.begin(), four.end());
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw Error(ErrorCode::InvalidConfig, "pairing vertices must be distinct");
  for (Vertex v : f)
    if (!g.in_range(v) || g.degree(v) != 2 ||
        std::find(comp.begin(), comp.end(), v) == comp.end())
      throw Error(ErrorCode::InvalidConfig, "pairing vertices must be degree-2 members of the component");
  Census c = census(g, comp);
  if (c.degree2.size() != 4 || !c.degree1.empty() || c.other_deficient != 0)
    throw Error(ErrorCode::InvalidConfig, "component is not 3-regular apart from four degree-2 vertices");

  const Vertex u = f[0];
  std::vector<Vertex> adj, non;
  for (int i = 1; i < 4; ++i) (g.adjacent(u, f[i]) ? adj : non).push_back(f[i]);
  auto make = [&](Vertex a, Vertex b, Vertex p, Vertex q) -> std::optional<std::pair<MoveEdge, MoveEdge>> {
    if (g.adjacent(a, b) || g.adjacent(p, q)) return std::nullopt;
    return std::pair{MoveEdge(a, b), MoveEdge(p, q)};
  };
  std::optional<std::pair<MoveEdge, MoveEdge>> r;
  if (adj.empty()) {
    // u is free to pair with anyone; pick the partner leaving a non-adjacent pair.
    for (int i = 1; i < 4 && !r; ++i) {
      std::vector<Vertex> rest;
      for (int j = 1; j < 4; ++j)
        if (j != i) rest.push_back(f[j]);
      r = make(u, f[i], rest[0], rest[1]);
    }
  } else if (adj.size() == 1) {
    // u ~ a: a has one other neighbour at most among the remaining two.
    const Vertex a = adj[0];
    r = make(u, non[0], a, non[1]);
    if (!r) r = make(u, non[1], a, non[0]);
  } else if (adj.size() == 2) {
    r = make(u, non[0], adj[0], adj[1]);
  }
  if (!r) throw Error(ErrorCode::NoValidPairing, "no pairing with both pairs non-adjacent");
  return *r;
}

StrategyDecision main_table_move(const ComponentView& view, const GameGraph& g) {
  AvoiderPlan plan;
  plan.root_x = view.root_x;
  return main_move(plan, view, g);
}

AvoiderStep avoider_respond(const AvoiderPlan& plan_in, const ComponentView& view_in, const GameGraph& g,
                            const std::optional<MoveEdge>& opp, const AvoiderOptions& options) {
  if (g.k() != kCubic) throw Error(ErrorCode::InvalidConfig, "the avoider strategy needs degree cap 3");
  if (!has_legal_move(g)) throw Error(ErrorCode::NoLegalMove, "no legal move left");
  AvoiderPlan plan = plan_in;

  if (plan.root_x < 0) {
    if (!opp && g.edge_count() == 0) {
      plan.root_x = 0;
      return {mandated(g, 0, 1, "avoider-open"), plan};
    }
    if (opp) {
      plan.root_x = opp->u;
    } else {
      for (Vertex v = 0; v < g.n(); ++v)
        if (!g.is_isolated(v)) {
          plan.root_x = v;
          break;
        }
    }
  }
  const ComponentView view =
      view_in.root_x == plan.root_x && !view_in.c_vertices.empty() ? view_in : component_view(g, plan.root_x);

  if (WitnessReport w = has_witness(g)) {
    // An active phase still answers the opponent when its table has an entry.
    std::optional<StrategyDecision> scripted;
    if (plan.phase != AvoiderPhase::Main && plan.phase != AvoiderPhase::WitnessHold) {
      AvoiderPlan trial = plan;
      try {
        scripted = phase_move(trial, g, opp);
      } catch (const Error&) {
      }
    }
    plan.phase = AvoiderPhase::WitnessHold;
    plan.bindings.clear();
    plan.node = -1;
    return {scripted ? *scripted : witness_hold(g, w), plan};
  }

  std::optional<StrategyDecision> d;
  bool off_script = false;
  if (plan.phase != AvoiderPhase::Main && plan.phase != AvoiderPhase::WitnessHold) {
    try {
      d = phase_move(plan, g, opp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnmatchedPosition && !pool_exhausted(g, e)) throw;
      off_script = true;
      plan.phase = AvoiderPhase::Main;
      plan.bindings.clear();
      plan.node = -1;
    }
  }
  if (plan.phase == AvoiderPhase::WitnessHold) plan.phase = AvoiderPhase::Main;
  if (!d) {
    try {
      d = main_move(plan, view, g);
    } catch (const Error& e) {
      if (!pool_exhausted(g, e)) throw;
      off_script = true;
      plan.phase = AvoiderPhase::Main;
      plan.bindings.clear();
      plan.node = -1;
      d = StrategyDecision{legal_moves(g).front(), "pool-exhausted", true};
    }
  }

  const bool decisive = creates_witness(g, d->edge);
  if (!decisive && (options.take_immediate_witness || off_script)) {
    if (auto w = find_witness_move(g)) {
      d = StrategyDecision{*w, "witness-complete", false};
      plan.phase = AvoiderPhase::WitnessHold;
      plan.bindings.clear();
      plan.node = -1;
      return {*d, plan};
    }
  }
  if (off_script) {
    d->gap = !decisive;
    d->rule = decisive ? "witness-complete" : "fallback:" + d->rule;
  }
  if (decisive) {
    plan.phase = AvoiderPhase::WitnessHold;
    plan.bindings.clear();
    plan.node = -1;
  } else if (plan.phase == AvoiderPhase::Main) {
    mark_type_h(plan, add_edge(g, d->edge));
  }
  return {*d, plan};
}

StrategyDecision AvoiderPlayer::next(const GameGraph& g, const std::optional<MoveEdge>& opp) {
  ComponentView view;
  if (plan_.root_x >= 0) view = component_view(g, plan_.root_x);
  auto [d, p] = avoider_respond(plan_, view, g, opp, options_);
  plan_ = std::move(p);
  return d;
}

}  // namespace degree_game
