#include "degree_game/exhaust.hpp"

#include <unordered_set>

namespace degree_game {

namespace {

class Explorer {
 public:
  Explorer(Role role, const ExhaustOptions& options, ExhaustReport& report)
      : objective_(objective_for(role)), options_(options), report_(report) {}

  void explore(GameGraph& g, const Strategy& strategy, bool strategy_turn,
               const std::optional<MoveEdge>& last_opp) {
    if (report_.truncated) return;
    if (options_.max_nodes && report_.nodes >= options_.max_nodes) {
      report_.truncated = true;
      return;
    }
    ++report_.nodes;
    if (!has_legal_move(g)) {
      terminal(g);
      return;
    }
    if (strategy_turn) {
      Strategy next = strategy;
      StrategyDecision d;
      try {
        d = strategy_move(next, g, last_opp);
        if (auto err = g.check_move(d.edge))
          throw Error(ErrorCode::IllegalReply, "strategy played illegal " + to_string(d.edge));
      } catch (const Error& e) {
        ++report_.errors;
        remember(report_.error_lines, std::string(e.what()) + " | line: " + line_string());
        finish_without_strategy(g, true);
        return;
      }
      if (d.gap) ++report_.gaps;
      push(g, d.edge);
      explore(g, next, false, std::nullopt);
      pop(g);
      return;
    }
    std::string key = canonical_key(g, strategy_colors(strategy, g), options_.bound);
    key += strategy_tag(strategy);
    if (!seen_.insert(std::move(key)).second) {
      ++report_.pruned;
      return;
    }
    for (const auto& m : legal_moves(g)) {
      push(g, m);
      explore(g, strategy, true, m);
      pop(g);
      if (report_.truncated) return;
    }
  }

 private:
  // After the strategy breaks, its side plays the lowest legal edge so the
  // line still reaches a terminal position that can be judged.
  void finish_without_strategy(GameGraph& g, bool strategy_turn) {
    if (report_.truncated) return;
    if (options_.max_nodes && report_.nodes >= options_.max_nodes) {
      report_.truncated = true;
      return;
    }
    ++report_.nodes;
    if (!has_legal_move(g)) {
      terminal(g);
      return;
    }
    auto moves = legal_moves(g);
    if (strategy_turn) moves.resize(1);
    for (const auto& m : moves) {
      push(g, m);
      finish_without_strategy(g, !strategy_turn);
      pop(g);
      if (report_.truncated) return;
    }
  }

  void terminal(const GameGraph& g) {
    ++report_.lines;
    const bool ok = objective_holds(g, objective_);
    if (ok)
      ++report_.successes;
    else {
      ++report_.failures;
      remember(report_.failure_lines, line_string());
    }
    report_.terminal_classes.emplace(canonical_key(g, {}, std::max(options_.bound, g.n())), ok);
  }

  void remember(std::vector<std::string>& out, std::string s) const {
    if (out.size() < options_.keep_examples) out.push_back(std::move(s));
  }

  std::string line_string() const {
    std::string s;
    for (const auto& m : line_) s += to_string(m) + " ";
    if (!s.empty()) s.pop_back();
    return s;
  }

  void push(GameGraph& g, const MoveEdge& m) {
    g.insert(m);
    line_.push_back(m);
  }
  void pop(GameGraph& g) {
    g.erase(line_.back());
    line_.pop_back();
  }

  Objective objective_;
  ExhaustOptions options_;
  ExhaustReport& report_;
  std::unordered_set<std::string> seen_;
  std::vector<MoveEdge> line_;
};

}  // namespace

ExhaustReport exhaust_adversary(const Strategy& strategy, Role role, const GameGraph& g0,
                                const ExhaustOptions& options) {
  if (g0.n() > options.bound)
    throw Error(ErrorCode::TooLarge, "exhaustive search limited to n <= " + std::to_string(options.bound));
  ExhaustReport report;
  Explorer explorer(role, options, report);
  GameGraph g = g0;
  explorer.explore(g, strategy, options.strategy_first, std::nullopt);
  return report;
}

}  // namespace degree_game
