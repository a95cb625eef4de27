#include "degree_game/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace degree_game {

namespace {

struct Dfs {
  std::vector<int> disc, low;
  std::vector<char> cut;
  int time = 0;
};

void articulation_dfs(const GameGraph& g, Vertex root, Dfs& s) {
  struct Frame {
    Vertex v, parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack{{root, -1, 0, 0}};
  s.disc[root] = s.low[root] = s.time++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      Vertex w = nb[f.next++];
      if (s.disc[w] == -1) {
        ++f.children;
        s.disc[w] = s.low[w] = s.time++;
        stack.push_back({w, f.v, 0, 0});
      } else if (w != f.parent) {
        s.low[f.v] = std::min(s.low[f.v], s.disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children > 1) s.cut[done.v] = 1;
      break;
    }
    Frame& p = stack.back();
    s.low[p.v] = std::min(s.low[p.v], s.low[done.v]);
    if (p.parent != -1 && s.low[done.v] >= s.disc[p.v]) s.cut[p.v] = 1;
  }
}

// Backtracking with a feasibility check: every unvisited vertex keeps at
// least two neighbours among unvisited vertices, the start and the path end.
class HamSearch {
 public:
  explicit HamSearch(const GameGraph& g)
      : g_(g), visited_(static_cast<std::size_t>(g.n()), 0) {}

  std::optional<std::vector<Vertex>> run() {
    path_.push_back(0);
    visited_[0] = 1;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  int available(Vertex u, Vertex end) const {
    int c = 0;
    for (Vertex w : g_.neighbors(u))
      if (!visited_[w] || w == 0 || w == end) ++c;
    return c;
  }

  bool extend() {
    Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == g_.n()) return g_.adjacent(end, 0);
    for (Vertex w : g_.neighbors(end)) {
      if (visited_[w]) continue;
      visited_[w] = 1;
      path_.push_back(w);
      bool ok = true;
      for (Vertex u : g_.neighbors(end))
        if (!visited_[u] && available(u, w) < 2) {
          ok = false;
          break;
        }
      if (ok && extend()) return true;
      path_.pop_back();
      visited_[w] = 0;
    }
    return false;
  }

  const GameGraph& g_;
  std::vector<char> visited_;
  std::vector<Vertex> path_;
};

// Colour refinement followed by a branch-and-bound search for the
// lexicographically largest adjacency code among colour-respecting orders.
class Canonizer {
 public:
  Canonizer(const GameGraph& g, std::span<const int> colors) : g_(g), n_(g.n()) {
    color_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) color_[v] = colors.empty() ? 0 : colors[v];
    input_color_ = color_;
  }

  std::string key() {
    refine();
    cell_.resize(static_cast<std::size_t>(n_));
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return color_[a] < color_[b]; });
    for (int i = 0; i < n_; ++i) cell_[i] = color_[order[i]];
    twins();
    used_.assign(static_cast<std::size_t>(n_), 0);
    perm_.assign(static_cast<std::size_t>(n_), -1);
    cur_.assign(static_cast<std::size_t>(n_), 0);
    search(0);

    std::string out;
    out.push_back(static_cast<char>(n_));
    out.push_back(static_cast<char>(g_.k()));
    for (int i = 0; i < n_; ++i) append_int(out, input_color_[best_perm_[i]]);
    for (int i = 1; i < n_; ++i) append_int(out, static_cast<int>(best_[i]));
    return out;
  }

 private:
  static void append_int(std::string& s, int x) {
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  }

  void refine() {
    auto rank = [&](const std::vector<std::vector<int>>& sig) {
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (Vertex v = 0; v < n_; ++v) color_[v] = ids[sig[v]];
      return next;
    };
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) sig[v] = {color_[v], g_.degree(v)};
    int classes = rank(sig);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        sig[v] = {color_[v]};
        std::vector<int> nc;
        for (Vertex w : g_.neighbors(v)) nc.push_back(color_[w]);
        std::sort(nc.begin(), nc.end());
        sig[v].insert(sig[v].end(), nc.begin(), nc.end());
      }
      int next = rank(sig);
      if (next == classes) break;
      classes = next;
    }
  }

  void twins() {
    twin_.assign(static_cast<std::size_t>(n_), -1);
    for (Vertex a = 0; a < n_; ++a) {
      if (twin_[a] != -1) continue;
      twin_[a] = a;
      for (Vertex b = a + 1; b < n_; ++b) {
        if (twin_[b] != -1 || color_[a] != color_[b]) continue;
        if (same_except(a, b)) twin_[b] = a;
      }
    }
  }

  bool same_except(Vertex a, Vertex b) const {
    std::vector<Vertex> na, nb;
    for (Vertex w : g_.neighbors(a))
      if (w != b) na.push_back(w);
    for (Vertex w : g_.neighbors(b))
      if (w != a) nb.push_back(w);
    return na == nb;
  }

  // -1: current prefix below best, 0 equal, 1 above.
  int compare_prefix(int len) const {
    if (!have_best_) return 1;
    for (int i = 0; i < len; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] > best_[i] ? 1 : -1;
    }
    return 0;
  }

  void search(int i) {
    if (i == n_) {
      if (compare_prefix(n_) > 0) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::vector<char> tried_class(static_cast<std::size_t>(n_), 0);
    for (Vertex c = 0; c < n_; ++c) {
      if (used_[c] || color_[c] != cell_[i]) continue;
      if (tried_class[twin_[c]]) continue;
      tried_class[twin_[c]] = 1;
      std::uint32_t row = 0;
      for (int j = 0; j < i; ++j) row = (row << 1) | (g_.adjacent(perm_[j], c) ? 1u : 0u);
      cur_[i] = row;
      if (compare_prefix(i + 1) < 0) continue;
      used_[c] = 1;
      perm_[i] = c;
      search(i + 1);
      used_[c] = 0;
    }
  }

  const GameGraph& g_;
  int n_;
  std::vector<int> color_, input_color_, cell_, twin_;
  std::vector<char> used_;
  std::vector<Vertex> perm_, best_perm_;
  std::vector<std::uint32_t> cur_, best_;
  bool have_best_ = false;
};

bool is_terminal_cutoff(const GameGraph& g, Objective obj, bool& pursuer_wins) {
  const bool can_cycle = g.edge_count() >= g.n();
  switch (obj) {
    case Objective::ForceHamiltonian:
      if (can_cycle && hamilton_cycle(g)) return pursuer_wins = true, true;
      break;
    case Objective::AvoidHamiltonian:
      if (can_cycle && hamilton_cycle(g)) return pursuer_wins = false, true;
      break;
    case Objective::AvoidTwoConnected:
      if (can_cycle && is_two_connected(g)) return pursuer_wins = false, true;
      break;
  }
  if (g.k() == kCubic && has_witness(g)) {
    pursuer_wins = obj != Objective::ForceHamiltonian;
    return true;
  }
  return false;
}

class Solver {
 public:
  Solver(Objective obj, int bound) : obj_(obj), bound_(bound) {}

  bool pursuer_wins(GameGraph& g, Side side) {
    ++nodes;
    bool value = false;
    if (is_terminal_cutoff(g, obj_, value)) return value;
    std::string key = canonical_key(g, {}, bound_);
    key.push_back(side == Side::Pursuer ? 'P' : 'O');
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto moves = legal_moves(g);
    if (moves.empty()) {
      value = objective_holds(g, obj_);
    } else {
      const bool want = side == Side::Pursuer;
      value = !want;
      for (const auto& m : moves) {
        g.insert(m);
        bool child = pursuer_wins(g, side == Side::Pursuer ? Side::Opponent : Side::Pursuer);
        g.erase(m);
        if (child == want) {
          value = want;
          break;
        }
      }
    }
    memo_.emplace(std::move(key), value);
    return value;
  }

  std::uint64_t nodes = 0;

 private:
  Objective obj_;
  int bound_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

std::vector<Vertex> articulation_points(const GameGraph& g) {
  Dfs s;
  s.disc.assign(static_cast<std::size_t>(g.n()), -1);
  s.low.assign(s.disc.size(), 0);
  s.cut.assign(s.disc.size(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (s.disc[v] == -1) articulation_dfs(g, v, s);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (s.cut[v]) out.push_back(v);
  return out;
}

bool is_two_connected(const GameGraph& g) {
  if (g.n() < 3) return false;
  Dfs s;
  s.disc.assign(static_cast<std::size_t>(g.n()), -1);
  s.low.assign(s.disc.size(), 0);
  s.cut.assign(s.disc.size(), 0);
  articulation_dfs(g, 0, s);
  for (Vertex v = 0; v < g.n(); ++v)
    if (s.disc[v] == -1 || s.cut[v]) return false;
  return true;
}

std::optional<std::vector<Vertex>> hamilton_cycle(const GameGraph& g) {
  if (g.n() < 3 || g.edge_count() < g.n()) return std::nullopt;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) < 2) return std::nullopt;
  if (!is_two_connected(g)) return std::nullopt;
  return HamSearch(g).run();
}

std::string_view to_string(Side side) {
  return side == Side::Pursuer ? "pursuer" : "opponent";
}

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::ForceHamiltonian: return "force_hamiltonian";
    case Objective::AvoidHamiltonian: return "avoid_hamiltonian";
    case Objective::AvoidTwoConnected: return "avoid_two_connected";
  }
  return "force_hamiltonian";
}

Objective objective_from_string(std::string_view s) {
  if (s == "force_hamiltonian" || s == "force-hamiltonian") return Objective::ForceHamiltonian;
  if (s == "avoid_hamiltonian" || s == "avoid-hamiltonian") return Objective::AvoidHamiltonian;
  if (s == "avoid_two_connected" || s == "avoid-two-connected") return Objective::AvoidTwoConnected;
  throw Error(ErrorCode::ParseError, "unknown objective '" + std::string(s) + "'");
}

bool objective_holds(const GameGraph& g, Objective objective) {
  switch (objective) {
    case Objective::ForceHamiltonian: return hamilton_cycle(g).has_value();
    case Objective::AvoidHamiltonian: return !hamilton_cycle(g).has_value();
    case Objective::AvoidTwoConnected: return !is_two_connected(g);
  }
  return false;
}

std::string canonical_key(const GameGraph& g, std::span<const int> colors, int bound) {
  if (g.n() > bound)
    throw Error(ErrorCode::TooLarge,
                "canonical form limited to " + std::to_string(bound) + " vertices");
  if (!colors.empty() && static_cast<int>(colors.size()) != g.n())
    throw Error(ErrorCode::InvalidConfig, "colour vector length differs from vertex count");
  if (g.n() == 0) return std::string(1, '\0') + static_cast<char>(g.k());
  return Canonizer(g, colors).key();
}

CanonicalForm canonical_form(const GameGraph& g, Side side, int bound) {
  CanonicalForm f{canonical_key(g, {}, bound)};
  f.key.push_back(side == Side::Pursuer ? 'P' : 'O');
  return f;
}

int solver_bound(int k) { return k == kCubic ? 7 : 6; }

SolveResult solve(const GameGraph& g, Side side, Objective objective, int max_n) {
  const int bound = max_n < 0 ? solver_bound(g.k()) : max_n;
  if (g.n() > bound)
    throw Error(ErrorCode::TooLarge, "solver limited to n <= " + std::to_string(bound) +
                                         " for k = " + std::to_string(g.k()));
  SolveResult r;
  r.objective = objective;
  r.side = side;
  Solver solver(objective, std::max(bound, g.n()));
  GameGraph work = g;
  const bool mover_is_pursuer = side == Side::Pursuer;
  const Side next = mover_is_pursuer ? Side::Opponent : Side::Pursuer;
  auto moves = legal_moves(work);
  if (moves.empty()) {
    r.pursuer_wins = objective_holds(work, objective);
  } else {
    r.pursuer_wins = !mover_is_pursuer;
    for (const auto& m : moves) {
      work.insert(m);
      bool child = solver.pursuer_wins(work, next);
      work.erase(m);
      if (child == mover_is_pursuer) {
        r.pursuer_wins = mover_is_pursuer;
        r.principal_move = m;
        break;
      }
    }
    if (!r.principal_move) r.principal_move = moves.front();
  }
  r.mover_wins = r.pursuer_wins == mover_is_pursuer;
  r.nodes_expanded = solver.nodes + 1;
  return r;
}

}  // namespace degree_game
