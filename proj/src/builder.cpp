#include "degree_game/builder.hpp"

#include <algorithm>

namespace degree_game {

namespace {

enum class Place { Front, Back, Interior, Outside };

Place place_of(const HamPathState& s, const std::vector<int>& pos, Vertex v) {
  if (pos[v] < 0) return Place::Outside;
  if (v == s.x1()) return Place::Front;
  if (v == s.x2()) return Place::Back;
  return Place::Interior;
}

StrategyDecision checked(const GameGraph& g, MoveEdge e, std::string rule) {
  if (auto err = g.check_move(e))
    throw Error(ErrorCode::IllegalReply, "builder reply " + to_string(e) + " (" + rule +
                                             ") is illegal: " + std::string(to_string(*err)));
  return {e, std::move(rule), false};
}

}  // namespace

StrategyDecision filler_move(const GameGraph& g) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.is_legal(u, v)) return {MoveEdge(u, v), "filler", false};
  throw Error(ErrorCode::NoLegalMove, "no legal move left");
}

BuilderStep builder_open(const GameGraph& g) {
  if (g.k() < 4) throw Error(ErrorCode::InvalidConfig, "the path strategy needs degree cap >= 4");
  if (g.edge_count() == 0) {
    if (g.n() < 2) throw Error(ErrorCode::NoLegalMove, "fewer than two vertices");
    return {checked(g, MoveEdge(0, 1), "builder-open-first"), HamPathState{{0, 1}}};
  }
  if (g.edge_count() != 1)
    throw Error(ErrorCode::BadOpening, "opening needs an empty board or a single edge");
  MoveEdge e = g.edges().front();
  HamPathState s{{e.u, e.v}};
  auto v = lowest_isolated(g);
  if (!v) return {filler_move(g), s};
  s.path.push_back(*v);
  return {checked(g, MoveEdge(e.v, *v), "builder-open-second"), s};
}

StrategyDecision builder_close(const HamPathState& state, const GameGraph& g) {
  if (state.path.empty()) throw Error(ErrorCode::NoPathState, "no path");
  if (!state.spanning(g) || lowest_isolated(g))
    throw Error(ErrorCode::NoPathState, "path does not span the vertex pool");
  if (!g.adjacent(state.x1(), state.x2()))
    return checked(g, MoveEdge(state.x1(), state.x2()), "builder-close");
  return filler_move(g);
}

BuilderStep builder_respond(const HamPathState& state, const GameGraph& g, const MoveEdge& opp) {
  if (state.path.size() < 2) throw Error(ErrorCode::NoPathState, "no path");
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < state.path.size(); ++i) pos[state.path[i]] = static_cast<int>(i);

  Place pu = place_of(state, pos, opp.u);
  Place pv = place_of(state, pos, opp.v);
  Vertex a = opp.u, b = opp.v;
  // Normalise so that `a` is the endpoint ranked first: Front, Back, Interior, Outside.
  if (static_cast<int>(pv) < static_cast<int>(pu)) {
    std::swap(pu, pv);
    std::swap(a, b);
  }
  HamPathState next = state;
  const Vertex x1 = state.x1(), x2 = state.x2();
  auto iso = lowest_isolated(g);

  auto closed = [&](HamPathState s, const char* rule) -> BuilderStep {
    if (g.adjacent(s.x1(), s.x2())) return {filler_move(g), s};
    return {checked(g, MoveEdge(s.x1(), s.x2()), rule), s};
  };

  if (pu == Place::Outside) {  // both outside: row (a)
    next.path.push_back(a);
    next.path.push_back(b);
    return {checked(g, MoveEdge(x2, a), "builder-row-a"), next};
  }
  if (pu == Place::Interior && pv == Place::Interior) {  // row (b)
    if (!iso) return closed(next, "builder-close");
    next.path.push_back(*iso);
    return {checked(g, MoveEdge(x2, *iso), "builder-row-b"), next};
  }
  if (pu == Place::Interior && pv == Place::Outside) {  // row (d)
    next.path.push_back(b);
    return {checked(g, MoveEdge(x2, b), "builder-row-d"), next};
  }
  if (pu == Place::Front && pv == Place::Back) {  // row (f)
    if (!iso) return closed(next, "builder-close");
    next.path.assign(state.path.rbegin(), state.path.rend());
    next.path.insert(next.path.begin(), *iso);
    return {checked(g, MoveEdge(x2, *iso), "builder-row-f"), next};
  }
  if (pv == Place::Interior) {  // end to interior: row (c)
    if (!iso) return closed(next, "builder-close");
    if (pu == Place::Back) {
      next.path.push_back(*iso);
      return {checked(g, MoveEdge(x2, *iso), "builder-row-c"), next};
    }
    next.path.insert(next.path.begin(), *iso);
    return {checked(g, MoveEdge(x1, *iso), "builder-row-c"), next};
  }
  // end to outside: row (e)
  const Vertex v = b;
  if (pu == Place::Back) {
    next.path.push_back(v);
    if (!iso) return closed(next, "builder-row-e-close");
    next.path.push_back(*iso);
  } else {
    next.path.insert(next.path.begin(), v);
    if (!iso) return closed(next, "builder-row-e-close");
    next.path.insert(next.path.begin(), *iso);
  }
  return {checked(g, MoveEdge(v, *iso), "builder-row-e"), next};
}

std::optional<std::string> check_path_invariants(const HamPathState& state, const GameGraph& g) {
  const auto& p = state.path;
  if (p.size() < 2) return "path has fewer than two vertices";
  std::vector<char> on(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.in_range(p[i]) || on[p[i]]) return "path repeats or leaves the vertex pool";
    on[p[i]] = 1;
    if (i > 0 && !g.adjacent(p[i - 1], p[i]))
      return "path vertices " + std::to_string(p[i - 1]) + " and " + std::to_string(p[i]) +
             " are not adjacent";
  }
  if (!lowest_isolated(g)) return std::nullopt;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!g.is_isolated(v) && !on[v])
      return "non-isolated vertex " + std::to_string(v) + " is off the path";
  if (g.degree(state.x1()) != 1) return "front end does not have degree 1";
  if (g.degree(state.x2()) > 2) return "back end has degree above 2";
  return std::nullopt;
}

StrategyDecision BuilderPlayer::next(const GameGraph& g, const std::optional<MoveEdge>& opp) {
  if (!state_) {
    auto [d, s] = builder_open(g);
    state_ = std::move(s);
    return d;
  }
  if (state_->spanning(g)) return builder_close(*state_, g);
  if (!opp) throw Error(ErrorCode::NoPathState, "builder asked to move twice in a row");
  auto [d, s] = builder_respond(*state_, g, *opp);
  state_ = std::move(s);
  return d;
}

}  // namespace degree_game
