#include "degree_game/session.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace degree_game {

Role engine_role(Role human, int k) {
  if (human == Role::Builder && k == kCubic) return Role::Avoider;
  if (human == Role::Avoider && k >= 4) return Role::Builder;
  if (human == Role::Builder)
    throw Error(ErrorCode::InvalidConfig, "with k >= 4 the engine only plays the builder; take --human avoider");
  if (human == Role::Avoider)
    throw Error(ErrorCode::InvalidConfig, "with k = 3 the engine only plays the avoider; take --human builder");
  throw Error(ErrorCode::InvalidConfig, "the human must take a side");
}

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "{" + s + "}";
}

std::string illegal_text(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "illegal: self-loop";
    case ErrorCode::DegreeCapExceeded: return "illegal: degree cap";
    case ErrorCode::DuplicateEdge: return "illegal: edge already present";
    case ErrorCode::OutOfRange: return "illegal: vertex out of range";
    default: return "illegal: " + std::string(to_string(code));
  }
}

}  // namespace

std::string describe_position(const GameGraph& g, Vertex root) {
  std::ostringstream out;
  out << "edges:";
  for (const auto& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  out << "\ndegrees:";
  for (Vertex v = 0; v < g.n(); ++v) out << ' ' << v << ':' << g.degree(v);
  out << '\n';
  if (g.n() == 0) return out.str();
  ComponentView view = component_view(g, root);
  Snapshot s = take_snapshot(g, root);
  out << "C " << join(view.c_vertices) << ' ' << s.labels.front() << '\n';
  for (std::size_t i = 0; i < view.d_components.size(); ++i)
    out << "D " << join(view.d_components[i]) << ' ' << s.labels[i + 1] << '\n';
  out << "F(C)=" << s.f_c << " E(D)=" << s.e_d << '\n';
  return out.str();
}

std::string describe_witness(const GameGraph& g) {
  WitnessReport w = has_witness(g);
  switch (w.kind) {
    case WitnessKind::EventualCutVertex:
      return "eventual cut vertex " + std::to_string(w.vertex) + " with saturated side " + join(w.structure);
    case WitnessKind::ThreeRegularComponent: return "3-regular component " + join(w.structure);
    case WitnessKind::None: break;
  }
  return "none";
}

SessionResult play_session(std::istream& in, std::ostream& out, const SessionOptions& opt) {
  const Role engine = engine_role(opt.human, opt.k);
  if (opt.n < 1) throw Error(ErrorCode::InvalidConfig, "n must be positive");
  Strategy strategy = make_strategy(engine);
  GameGraph g(opt.n, opt.k);
  std::optional<Vertex> root;
  std::optional<MoveEdge> last_human;
  bool human_turn = opt.human_first;
  bool announced_witness = false;
  SessionResult result;

  out << "n=" << opt.n << " k=" << opt.k << ", you play the " << to_string(opt.human) << ", engine plays the "
      << to_string(engine) << '\n';
  while (has_legal_move(g)) {
    MoveEdge move;
    if (human_turn) {
      out << describe_position(g, root.value_or(0)) << "your move (u v): " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\ninput closed, session ends\n";
        result.final_graph = g;
        return result;
      }
      std::istringstream ls(line);
      long long a = 0, b = 0;
      std::string rest;
      if (!(ls >> a >> b) || (ls >> rest)) {
        out << "enter two vertex numbers separated by a space\n";
        continue;
      }
      if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) {
        out << illegal_text(ErrorCode::OutOfRange) << '\n';
        continue;
      }
      if (auto err = g.check_move(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
        out << illegal_text(*err) << '\n';
        continue;
      }
      move = MoveEdge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      last_human = move;
    } else {
      StrategyDecision d;
      try {
        d = strategy_move(strategy, g, last_human);
      } catch (const Error& e) {
        d = StrategyDecision{legal_moves(g).front(), "fallback:lowest-legal", true};
        out << "engine strategy left its table (" << e.what() << ")\n";
      }
      move = d.edge;
      out << "engine plays " << move.u << ' ' << move.v;
      if (!opt.quiet) out << "  [" << d.rule << (d.gap ? ", gap" : "") << ']';
      out << '\n';
      last_human.reset();
    }
    g.insert(move);
    if (!root) root = move.u;
    if (g.k() == kCubic && !announced_witness && has_witness(g)) {
      announced_witness = true;
      out << "witness: " << describe_witness(g) << '\n';
    }
    human_turn = !human_turn;
  }

  result.finished = true;
  result.terminal = evaluate_terminal(g, engine);
  out << describe_position(g, root.value_or(0)) << "game over after " << g.edge_count() << " edges\n"
      << "hamiltonian: " << (result.terminal.hamiltonian ? "true" : "false") << '\n'
      << "not 2-connected: " << (result.terminal.two_connected ? "false" : "true") << '\n';
  if (g.k() == kCubic) out << "witness: " << describe_witness(g) << '\n';
  result.final_graph = std::move(g);
  return result;
}

}  // namespace degree_game
