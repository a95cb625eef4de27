#include "degree_game/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace degree_game {

GameGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, k = 0;
  if (!(in >> n >> k)) throw Error(ErrorCode::ParseError, "graph text must start with 'n k'");
  GameGraph g(n, k);
  long long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error(ErrorCode::ParseError, "dangling vertex at end of edge list");
    g.insert(MoveEdge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  if (!in.eof()) throw Error(ErrorCode::ParseError, "non-numeric token in edge list");
  return g;
}

std::string format_graph_text(const GameGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.k() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GameGraph parse_graph_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    GameGraph g(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u, v]");
      g.insert(MoveEdge(e[0].get<int>(), e[1].get<int>()));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string format_graph_json(const GameGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["k"] = g.k();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

GameGraph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

GameGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace degree_game
