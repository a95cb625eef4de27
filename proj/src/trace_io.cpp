#include "degree_game/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace degree_game {

using Json = nlohmann::ordered_json;

namespace {

Json edge_json(const MoveEdge& e) { return Json::array({e.u, e.v}); }

MoveEdge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u, v]");
  return MoveEdge(j[0].get<int>(), j[1].get<int>());
}

Json header_json(const GameTrace& t) {
  const GameConfig& c = t.config;
  Json h;
  h["n"] = c.n;
  h["k"] = c.k;
  h["role"] = to_string(c.role);
  h["first"] = to_string(c.first);
  h["opponent"] = to_string(c.opponent);
  h["seed"] = c.seed;
  h["n0"] = c.n0_threshold;
  h["take_immediate_witness"] = c.avoider.take_immediate_witness;
  Json init = Json::array();
  if (c.initial_graph)
    for (const auto& e : c.initial_graph->edges()) init.push_back(edge_json(e));
  h["initial_edges"] = init;
  if (c.opponent == OpponentKind::Scripted) {
    Json script = Json::array();
    for (const auto& e : c.script) script.push_back(edge_json(e));
    h["script"] = script;
  }
  h["root_x"] = t.root_x;
  return Json{{"header", h}};
}

Json move_json(const MoveRecord& m, const Snapshot& s) {
  Json j;
  j["i"] = m.index;
  j["player"] = m.player;
  j["edge"] = edge_json(m.edge);
  j["rule"] = m.rule;
  j["F_C"] = s.f_c;
  j["E_D"] = s.e_d;
  j["labels"] = s.labels;
  if (s.witness == WitnessKind::None)
    j["witness"] = nullptr;
  else
    j["witness"] = Json{{"kind", to_string(s.witness)}, {"at", s.witness_at}};
  return j;
}

Json trailer_json(const GameTrace& t) {
  Json j;
  j["hamiltonian"] = t.terminal.hamiltonian;
  j["two_connected"] = t.terminal.two_connected;
  j["objective_met"] = t.terminal.objective_met;
  j["moves"] = t.moves.size();
  j["edges"] = t.terminal.edges;
  j["builder_violations"] = t.builder_violations;
  return Json{{"trailer", j}};
}

WitnessKind witness_from(const std::string& s) {
  for (auto k : {WitnessKind::None, WitnessKind::EventualCutVertex, WitnessKind::ThreeRegularComponent})
    if (s == to_string(k)) return k;
  throw Error(ErrorCode::ParseError, "unknown witness kind '" + s + "'");
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

void write_trace(std::ostream& out, const GameTrace& trace) {
  out << header_json(trace).dump() << '\n';
  for (std::size_t i = 0; i < trace.moves.size(); ++i)
    out << move_json(trace.moves[i], trace.snapshots[i]).dump() << '\n';
  out << trailer_json(trace).dump() << '\n';
}

std::string trace_to_string(const GameTrace& trace) {
  std::ostringstream s;
  write_trace(s, trace);
  return s.str();
}

std::vector<GameTrace> read_traces(std::istream& in) {
  std::vector<GameTrace> out;
  std::optional<GameTrace> cur;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, where(line) + e.what());
    }
    try {
      if (j.contains("header")) {
        if (cur) throw Error(ErrorCode::ParseError, where(line) + "header before previous trailer");
        const Json& h = j["header"];
        cur.emplace();
        GameConfig& c = cur->config;
        c.n = h.at("n").get<int>();
        c.k = h.at("k").get<int>();
        c.role = role_from_string(h.at("role").get<std::string>());
        c.first = first_from_string(h.at("first").get<std::string>());
        c.opponent = opponent_from_string(h.at("opponent").get<std::string>());
        c.seed = h.at("seed").get<std::uint64_t>();
        c.n0_threshold = h.value("n0", 24);
        c.avoider.take_immediate_witness = h.value("take_immediate_witness", true);
        std::vector<MoveEdge> init;
        for (const auto& e : h.at("initial_edges")) init.push_back(edge_from(e));
        if (!init.empty()) c.initial_graph = GameGraph::from_edges(c.n, c.k, init);
        if (h.contains("script"))
          for (const auto& e : h["script"]) c.script.push_back(edge_from(e));
        cur->root_x = h.at("root_x").get<int>();
      } else if (j.contains("trailer")) {
        if (!cur) throw Error(ErrorCode::ParseError, where(line) + "trailer without header");
        const Json& t = j["trailer"];
        cur->terminal.hamiltonian = t.at("hamiltonian").get<bool>();
        cur->terminal.two_connected = t.at("two_connected").get<bool>();
        cur->terminal.objective_met = t.at("objective_met").get<bool>();
        cur->terminal.edges = t.at("edges").get<int>();
        if (t.at("moves").get<std::size_t>() != cur->moves.size())
          throw Error(ErrorCode::ParseError, where(line) + "trailer move count disagrees with records");
        cur->builder_violations = t.value("builder_violations", std::vector<std::string>{});
        GameGraph g = cur->config.initial_graph ? *cur->config.initial_graph
                                                : GameGraph(cur->config.n, cur->config.k);
        for (const auto& m : cur->moves) {
          if (auto err = g.check_move(m.edge))
            throw Error(ErrorCode::ReplayMismatch,
                        "move " + std::to_string(m.index) + " is illegal: " + std::string(to_string(*err)));
          g.insert(m.edge);
        }
        cur->final_graph = std::move(g);
        out.push_back(std::move(*cur));
        cur.reset();
      } else {
        if (!cur) throw Error(ErrorCode::ParseError, where(line) + "move record without header");
        MoveRecord m;
        m.index = j.at("i").get<int>();
        m.player = j.at("player").get<int>();
        m.edge = edge_from(j.at("edge"));
        m.rule = j.at("rule").get<std::string>();
        const auto& c = cur->config;
        const bool strategy_player = (m.player == 1) == (c.first == FirstMover::Strategy);
        m.by_strategy = c.role != Role::None && strategy_player;
        m.gap = m.rule.rfind("fallback:", 0) == 0 || m.rule.ends_with("-gap");
        Snapshot s;
        s.f_c = j.at("F_C").get<int>();
        s.e_d = j.at("E_D").get<int>();
        s.labels = j.at("labels").get<std::vector<std::string>>();
        if (!j.at("witness").is_null()) {
          s.witness = witness_from(j["witness"].at("kind").get<std::string>());
          s.witness_at = j["witness"].at("at").get<int>();
        }
        cur->moves.push_back(std::move(m));
        cur->snapshots.push_back(std::move(s));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, where(line) + e.what());
    }
  }
  if (cur) throw Error(ErrorCode::ParseError, "trace ends without a trailer");
  return out;
}

void verify_replay(const GameTrace& trace) {
  const GameConfig& c = trace.config;
  GameGraph g = c.initial_graph ? *c.initial_graph : GameGraph(c.n, c.k);
  if (trace.moves.size() != trace.snapshots.size())
    throw Error(ErrorCode::ReplayMismatch, "move and snapshot counts differ");
  const std::optional<MoveEdge> first =
      trace.moves.empty() ? std::nullopt : std::optional<MoveEdge>(trace.moves.front().edge);
  const Vertex root = tracked_root(c.initial_graph, first);
  if (root != trace.root_x) throw Error(ErrorCode::ReplayMismatch, "header root_x disagrees with the moves");
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const MoveRecord& m = trace.moves[i];
    if (m.index != static_cast<int>(i) || m.player != static_cast<int>(i % 2) + 1)
      throw Error(ErrorCode::ReplayMismatch, "move " + std::to_string(i) + ": index or player out of order");
    if (auto err = g.check_move(m.edge))
      throw Error(ErrorCode::ReplayMismatch,
                  "move " + std::to_string(i) + ": illegal edge (" + std::string(to_string(*err)) + ")");
    g.insert(m.edge);
    if (!(take_snapshot(g, root) == trace.snapshots[i]))
      throw Error(ErrorCode::ReplayMismatch, "move " + std::to_string(i) + ": snapshot differs from replay");
  }
  if (has_legal_move(g)) throw Error(ErrorCode::ReplayMismatch, "trace stops before the game is over");
  TerminalOutcome t = evaluate_terminal(g, c.role);
  const TerminalOutcome& r = trace.terminal;
  if (t.hamiltonian != r.hamiltonian || t.two_connected != r.two_connected ||
      t.objective_met != r.objective_met || t.edges != r.edges)
    throw Error(ErrorCode::ReplayMismatch, "terminal outcome differs from replay");
}

}  // namespace degree_game
