#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degree_game/engine.hpp"

namespace degree_game {

/// JSON lines: a header record, one record per move, a trailer record.
void write_trace(std::ostream& out, const GameTrace& trace);
std::string trace_to_string(const GameTrace& trace);

/// Parses one or more concatenated traces. Throws ParseError.
std::vector<GameTrace> read_traces(std::istream& in);

/// Replays the moves and compares every snapshot and the terminal record.
/// Throws ReplayMismatch naming the first differing move.
void verify_replay(const GameTrace& trace);

}  // namespace degree_game
