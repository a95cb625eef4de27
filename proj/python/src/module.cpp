#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "degree_game/avoider.hpp"
#include "degree_game/batch.hpp"
#include "degree_game/classify.hpp"
#include "degree_game/engine.hpp"
#include "degree_game/exhaust.hpp"
#include "degree_game/graph_io.hpp"
#include "degree_game/monitors.hpp"
#include "degree_game/oracle.hpp"
#include "degree_game/trace_io.hpp"

namespace py = pybind11;
using namespace degree_game;

namespace {

using Pair = std::pair<Vertex, Vertex>;

std::vector<Pair> as_pairs(const std::vector<MoveEdge>& edges) {
  std::vector<Pair> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

GameGraph graph_from_pairs(int n, int k, const std::vector<Pair>& pairs) {
  std::vector<MoveEdge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return GameGraph::from_edges(n, k, edges);
}

py::object witness_dict(const WitnessReport& w) {
  if (!w) return py::none();
  py::dict d;
  d["kind"] = std::string(to_string(w.kind));
  d["at"] = w.vertex;
  d["structure"] = w.structure;
  return d;
}

GameConfig make_config(int n, int k, const std::string& role, const std::string& first, const std::string& opponent,
                       std::uint64_t seed) {
  GameConfig c;
  c.n = n;
  c.k = k;
  c.role = role_from_string(role);
  c.first = first_from_string(first);
  c.opponent = opponent_from_string(opponent);
  c.seed = seed;
  validate(c);
  return c;
}

py::dict trace_dict(const GameTrace& t) {
  py::list moves;
  for (const auto& m : t.moves) {
    py::dict d;
    d["player"] = m.player;
    d["by_strategy"] = m.by_strategy;
    d["edge"] = Pair{m.edge.u, m.edge.v};
    d["rule"] = m.rule;
    d["gap"] = m.gap;
    moves.append(d);
  }
  py::dict out;
  out["moves"] = moves;
  out["hamiltonian"] = t.terminal.hamiltonian;
  out["two_connected"] = t.terminal.two_connected;
  out["objective_met"] = t.terminal.objective_met;
  out["final_edges"] = as_pairs(t.final_graph.edges());
  out["trace"] = trace_to_string(t);
  return out;
}

py::list monitor_list(const std::vector<MonitorReport>& reports) {
  py::list out;
  for (const auto& r : reports) {
    py::dict d;
    d["name"] = r.name;
    d["applicable"] = r.applicable;
    d["checks"] = r.checks;
    d["violations"] = r.violations;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_degree_game, m) {
  m.doc() = "Degree-capped Hamiltonicity maker-breaker game";

  py::register_exception<Error>(m, "GameError", PyExc_ValueError);

  py::class_<GameGraph>(m, "Graph")
      .def(py::init<int, int>(), py::arg("n"), py::arg("k") = 3)
      .def_static("from_edges", &graph_from_pairs, py::arg("n"), py::arg("k"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("n", &GameGraph::n)
      .def_property_readonly("k", &GameGraph::k)
      .def("degree", &GameGraph::degree)
      .def("neighbors", &GameGraph::neighbors)
      .def("adjacent", &GameGraph::adjacent)
      .def("is_legal", py::overload_cast<Vertex, Vertex>(&GameGraph::is_legal, py::const_))
      .def("add", [](GameGraph& g, Vertex a, Vertex b) { g.insert(MoveEdge(a, b)); })
      .def("edges", [](const GameGraph& g) { return as_pairs(g.edges()); })
      .def("legal_moves", [](const GameGraph& g) { return as_pairs(legal_moves(g)); })
      .def("components", [](const GameGraph& g) { return components(g); })
      .def("to_json", &format_graph_json)
      .def("to_text", &format_graph_text)
      .def("__len__", &GameGraph::edge_count)
      .def("__eq__", [](const GameGraph& a, const GameGraph& b) { return a == b; })
      .def("__repr__", [](const GameGraph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", k=" + std::to_string(g.k()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("has_witness", [](const GameGraph& g) { return witness_dict(has_witness(g)); });
  m.def("hamilton_cycle", &hamilton_cycle);
  m.def("is_two_connected", &is_two_connected);
  m.def("canonical_key", [](const GameGraph& g) { return canonical_key(g); });

  m.def(
      "classify",
      [](const GameGraph& g, Vertex root) {
        ComponentView view = component_view(g, root);
        py::list comps;
        auto add = [&](const std::vector<Vertex>& vs) {
          TypeLabel t = classify_component(g, vs);
          py::dict d;
          d["vertices"] = vs;
          d["label"] = std::string(to_string(t.label));
          d["evidence"] = t.evidence;
          comps.append(d);
        };
        add(view.c_vertices);
        for (const auto& d : view.d_components) add(d);
        TypeAResult ta = classify_graph_typeA(g);
        py::dict out;
        out["components"] = comps;
        out["typeA"] = ta.holds;
        out["witness"] = witness_dict(has_witness(g));
        if (g.k() == kCubic) out["avoider_row"] = std::string(to_string(classify_avoider_state(view, g).row));
        return out;
      },
      py::arg("graph"), py::arg("root") = 0);

  m.def(
      "solve",
      [](const GameGraph& g, const std::string& side, const std::string& objective) {
        SolveResult r = solve(g, side == "opponent" ? Side::Opponent : Side::Pursuer, objective_from_string(objective));
        py::dict d;
        d["mover_wins"] = r.mover_wins;
        d["pursuer_wins"] = r.pursuer_wins;
        d["principal_move"] = r.principal_move ? py::cast(Pair{r.principal_move->u, r.principal_move->v}) : py::none();
        d["nodes"] = r.nodes_expanded;
        return d;
      },
      py::arg("graph"), py::arg("side") = "pursuer", py::arg("objective") = "force-hamiltonian");

  m.def(
      "play",
      [](int n, int k, const std::string& role, const std::string& first, const std::string& opponent,
         std::uint64_t seed) {
        GameConfig c = make_config(n, k, role, first, opponent, seed);
        py::gil_scoped_release release;
        GameTrace t = run_game(c);
        py::gil_scoped_acquire acquire;
        return trace_dict(t);
      },
      py::arg("n"), py::arg("k"), py::arg("role"), py::arg("first") = "strategy", py::arg("opponent") = "random",
      py::arg("seed") = 0);

  m.def(
      "simulate",
      [](int n, int k, const std::string& role, const std::string& first, const std::string& opponent,
         std::uint64_t seed, int games, int jobs) {
        BatchOptions opt;
        opt.base = make_config(n, k, role, first, opponent, seed);
        opt.games = games;
        opt.jobs = jobs;
        BatchSummary s;
        {
          py::gil_scoped_release release;
          s = run_batch(opt);
        }
        py::dict monitors;
        for (const auto& [name, t] : s.monitors)
          monitors[py::str(name)] = py::dict(py::arg("checks") = t.checks, py::arg("violations") = t.violations,
                                             py::arg("games") = t.games);
        py::dict d;
        d["games"] = s.games;
        d["successes"] = s.successes;
        d["errors"] = s.errors;
        d["gaps"] = s.gaps;
        d["witness_games"] = s.witness_games;
        d["gap_rules"] = s.gap_rules;
        d["monitors"] = monitors;
        d["clean"] = s.clean();
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("role"), py::arg("first") = "strategy", py::arg("opponent") = "random",
      py::arg("seed") = 0, py::arg("games") = 1, py::arg("jobs") = 1);

  m.def(
      "exhaust",
      [](int n, int k, const std::string& role, bool strategy_first) {
        Role r = role_from_string(role);
        ExhaustOptions opt;
        opt.strategy_first = strategy_first;
        ExhaustReport rep;
        {
          py::gil_scoped_release release;
          rep = exhaust_adversary(make_strategy(r), r, GameGraph(n, k), opt);
        }
        py::dict d;
        d["lines"] = rep.lines;
        d["nodes"] = rep.nodes;
        d["pruned"] = rep.pruned;
        d["successes"] = rep.successes;
        d["failures"] = rep.failures;
        d["errors"] = rep.errors;
        d["universal_success"] = rep.universal_success();
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("role"), py::arg("strategy_first") = true);

  m.def("check_trace", [](const std::string& text) {
    std::istringstream in(text);
    py::list out;
    for (const GameTrace& t : read_traces(in)) {
      verify_replay(t);
      out.append(monitor_list(run_all_monitors(t)));
    }
    return out;
  });
}
