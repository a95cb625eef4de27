#pragma once

#include <string>
#include <string_view>

#include "degree_game/graph.hpp"

namespace degree_game {

/// Text form: "n k" on the first line, then one "u v" edge per line.
GameGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const GameGraph& g);

/// JSON form: {"n":int,"k":int,"edges":[[u,v],...]}, edges sorted.
GameGraph parse_graph_json(std::string_view text);
std::string format_graph_json(const GameGraph& g);

/// Picks the JSON reader when the first non-blank character is '{'.
GameGraph parse_graph(std::string_view text);
GameGraph load_graph_file(const std::string& path);

}  // namespace degree_game
