#include "degree_game/graph.hpp"

#include <algorithm>
#include <numeric>

namespace degree_game {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAComponent: return "NotAComponent";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadOpening: return "BadOpening";
    case ErrorCode::IllegalReply: return "IllegalReply";
    case ErrorCode::NoPathState: return "NoPathState";
    case ErrorCode::NoLegalMove: return "NoLegalMove";
    case ErrorCode::StrategyBreak: return "StrategyBreak";
    case ErrorCode::NoValidPairing: return "NoValidPairing";
    case ErrorCode::UnmatchedPosition: return "UnmatchedPosition";
    case ErrorCode::IllegalMoveByOpponent: return "IllegalMoveByOpponent";
    case ErrorCode::ScriptExhausted: return "ScriptExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

std::string to_string(const MoveEdge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

GameGraph::GameGraph(int n, int k) : n_(n), k_(k), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "degree cap must be positive");
}

GameGraph GameGraph::from_edges(int n, int k, std::span<const MoveEdge> edges) {
  GameGraph g(n, k);
  for (const auto& e : edges) g.insert(e);
  return g;
}

bool GameGraph::adjacent(Vertex a, Vertex b) const {
  const auto& na = adj_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<MoveEdge> GameGraph::edges() const {
  std::vector<MoveEdge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<ErrorCode> GameGraph::check_move(Vertex a, Vertex b) const {
  if (!in_range(a) || !in_range(b)) return ErrorCode::OutOfRange;
  if (a == b) return ErrorCode::SelfLoop;
  if (adjacent(a, b)) return ErrorCode::DuplicateEdge;
  if (degree(a) >= k_ || degree(b) >= k_) return ErrorCode::DegreeCapExceeded;
  return std::nullopt;
}

std::optional<ErrorCode> GameGraph::check_move(const MoveEdge& m) const {
  return check_move(m.u, m.v);
}

void GameGraph::insert(const MoveEdge& m) {
  if (auto err = check_move(m)) throw Error(*err, "cannot add edge " + to_string(m));
  auto& nu = adj_[m.u];
  nu.insert(std::upper_bound(nu.begin(), nu.end(), m.v), m.v);
  auto& nv = adj_[m.v];
  nv.insert(std::upper_bound(nv.begin(), nv.end(), m.u), m.u);
  ++edge_count_;
}

void GameGraph::erase(const MoveEdge& m) {
  auto& nu = adj_[m.u];
  auto& nv = adj_[m.v];
  auto iu = std::lower_bound(nu.begin(), nu.end(), m.v);
  auto iv = std::lower_bound(nv.begin(), nv.end(), m.u);
  if (iu == nu.end() || *iu != m.v) throw Error(ErrorCode::OutOfRange, "no edge " + to_string(m));
  nu.erase(iu);
  nv.erase(iv);
  --edge_count_;
}

GameGraph add_edge(const GameGraph& g, const MoveEdge& m) {
  GameGraph out = g;
  out.insert(m);
  return out;
}

std::vector<MoveEdge> legal_moves(const GameGraph& g) {
  std::vector<MoveEdge> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) >= g.k()) continue;
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.degree(v) < g.k() && !g.adjacent(u, v)) out.emplace_back(u, v);
  }
  return out;
}

bool has_legal_move(const GameGraph& g) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) >= g.k()) continue;
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.degree(v) < g.k() && !g.adjacent(u, v)) return true;
  }
  return false;
}

std::vector<int> component_index(const GameGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] != -1 || g.is_isolated(s)) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> components(const GameGraph& g) {
  auto label = component_index(g);
  int count = 0;
  for (int l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.n(); ++v)
    if (label[v] >= 0) out[label[v]].push_back(v);
  return out;
}

std::vector<Vertex> isolated_vertices(const GameGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.is_isolated(v)) out.push_back(v);
  return out;
}

std::optional<Vertex> lowest_isolated(const GameGraph& g, std::span<const Vertex> exclude) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.is_isolated(v) && std::find(exclude.begin(), exclude.end(), v) == exclude.end())
      return v;
  return std::nullopt;
}

bool ComponentView::in_c(Vertex v) const {
  return std::binary_search(c_vertices.begin(), c_vertices.end(), v);
}

ComponentView component_view(const GameGraph& g, Vertex root_x) {
  if (!g.in_range(root_x)) throw Error(ErrorCode::OutOfRange, "root vertex out of range");
  ComponentView view;
  view.root_x = root_x;
  for (auto& comp : components(g)) {
    if (std::binary_search(comp.begin(), comp.end(), root_x))
      view.c_vertices = std::move(comp);
    else
      view.d_components.push_back(std::move(comp));
  }
  if (view.c_vertices.empty()) view.c_vertices.push_back(root_x);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.is_isolated(v) && v != root_x) view.isolated.push_back(v);
  return view;
}

FreedomStats freedom(const GameGraph& g, std::span<const Vertex> vertices) {
  FreedomStats out;
  std::vector<char> member(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : vertices) {
    member[v] = 1;
    out.f += kCubic - g.degree(v);
  }
  // Count connected pieces of the induced subgraph.
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack;
  int pieces = 0;
  for (Vertex s : vertices) {
    if (seen[s]) continue;
    ++pieces;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (member[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  out.e = out.f - 2 * pieces;
  return out;
}

int effective_freedom_of_rest(const GameGraph& g, const ComponentView& view) {
  int e = 0;
  for (const auto& comp : view.d_components) e += freedom(g, comp).e;
  return e;
}

bool is_eventual_cut_vertex(const GameGraph& g, Vertex x) {
  if (!g.in_range(x) || g.is_isolated(x)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  seen[x] = 1;
  std::vector<Vertex> stack, comp;
  for (Vertex start : g.neighbors(x)) {
    if (seen[start]) continue;
    comp.clear();
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    bool saturated = std::all_of(comp.begin(), comp.end(),
                                 [&](Vertex v) { return g.degree(v) == kCubic; });
    int into = 0;
    for (Vertex w : g.neighbors(x))
      if (std::find(comp.begin(), comp.end(), w) != comp.end()) ++into;
    if (saturated && (into == 1 || into == 2)) return true;
  }
  return false;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::None: return "none";
    case WitnessKind::EventualCutVertex: return "eventual_cut_vertex";
    case WitnessKind::ThreeRegularComponent: return "three_regular_component";
  }
  return "none";
}

namespace {

// Articulation-point scan of one component. For every vertex x and every
// component S of (component - x), checks "S saturated and x sends 1-2 edges
// into S" using DFS subtree aggregates.
class WitnessScanner {
 public:
  explicit WitnessScanner(const GameGraph& g)
      : g_(g),
        disc_(static_cast<std::size_t>(g.n()), -1),
        low_(disc_.size()),
        size_(disc_.size()),
        bad_(disc_.size()),
        parent_(disc_.size(), -1),
        order_() {}

  WitnessReport scan(Vertex root) {
    WitnessReport none;
    if (g_.is_isolated(root)) return none;
    order_.clear();
    dfs(root);
    const int comp_size = static_cast<int>(order_.size());
    const int comp_bad = bad_[root];
    if (comp_bad == 0 && comp_size < g_.n()) {
      WitnessReport r;
      r.kind = WitnessKind::ThreeRegularComponent;
      r.structure = order_;
      std::sort(r.structure.begin(), r.structure.end());
      r.vertex = r.structure.front();
      return r;
    }
    // Visit vertices in increasing label order for deterministic reports.
    std::vector<Vertex> by_label = order_;
    std::sort(by_label.begin(), by_label.end());
    for (Vertex x : by_label) {
      int sep_size = 0, sep_bad = 0, sep_edges = 0;
      for (Vertex c : g_.neighbors(x)) {
        if (parent_[c] != x) continue;
        if (parent_[x] != -1 && low_[c] < disc_[x]) continue;
        int into = edges_into_subtree(x, c);
        sep_size += size_[c];
        sep_bad += bad_[c];
        sep_edges += into;
        if (bad_[c] == 0 && (into == 1 || into == 2) && size_[c] + 1 < g_.n())
          return ecv(x, subtree(c));
      }
      if (parent_[x] == -1) continue;
      int rest_size = comp_size - 1 - sep_size;
      int rest_bad = comp_bad - (g_.degree(x) == kCubic ? 0 : 1) - sep_bad;
      int rest_edges = g_.degree(x) - sep_edges;
      if (rest_size > 0 && rest_bad == 0 && (rest_edges == 1 || rest_edges == 2) &&
          rest_size + 1 < g_.n()) {
        std::vector<Vertex> rest;
        std::vector<Vertex> excluded = {x};
        for (Vertex c : g_.neighbors(x))
          if (parent_[c] == x && low_[c] >= disc_[x])
            for (Vertex s : subtree(c)) excluded.push_back(s);
        std::sort(excluded.begin(), excluded.end());
        for (Vertex v : order_)
          if (!std::binary_search(excluded.begin(), excluded.end(), v)) rest.push_back(v);
        return ecv(x, std::move(rest));
      }
    }
    return none;
  }

 private:
  WitnessReport ecv(Vertex x, std::vector<Vertex> s) {
    WitnessReport r;
    r.kind = WitnessKind::EventualCutVertex;
    r.vertex = x;
    std::sort(s.begin(), s.end());
    r.structure = std::move(s);
    return r;
  }

  int edges_into_subtree(Vertex x, Vertex c) const {
    int count = 0;
    for (Vertex w : g_.neighbors(x))
      if (disc_[w] >= disc_[c] && disc_[w] < disc_[c] + size_[c]) ++count;
    return count;
  }

  std::vector<Vertex> subtree(Vertex c) const {
    std::vector<Vertex> out;
    for (Vertex v : order_)
      if (disc_[v] >= disc_[c] && disc_[v] < disc_[c] + size_[c]) out.push_back(v);
    return out;
  }

  // Iterative DFS; disc numbers are preorder so a subtree occupies a
  // contiguous disc range.
  void dfs(Vertex root) {
    struct Frame {
      Vertex v;
      std::size_t next;
    };
    std::vector<Frame> stack;
    int time = 0;
    disc_[root] = low_[root] = time++;
    parent_[root] = -1;
    order_.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& top = stack.back();
      Vertex v = top.v;
      const auto& nbrs = g_.neighbors(v);
      if (top.next < nbrs.size()) {
        Vertex w = nbrs[top.next++];
        if (disc_[w] == -1) {
          parent_[w] = v;
          disc_[w] = low_[w] = time++;
          order_.push_back(w);
          stack.push_back({w, 0});
        } else if (w != parent_[v]) {
          low_[v] = std::min(low_[v], disc_[w]);
        }
        continue;
      }
      size_[v] = 1;
      bad_[v] = g_.degree(v) == kCubic ? 0 : 1;
      for (Vertex w : nbrs)
        if (parent_[w] == v) {
          size_[v] += size_[w];
          bad_[v] += bad_[w];
        }
      stack.pop_back();
      if (!stack.empty()) {
        Vertex p = stack.back().v;
        low_[p] = std::min(low_[p], low_[v]);
      }
    }
  }

  const GameGraph& g_;
  std::vector<int> disc_, low_, size_, bad_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> order_;
};

}  // namespace

WitnessReport has_witness(const GameGraph& g) {
  WitnessScanner scanner(g);
  for (const auto& comp : components(g))
    if (auto r = scanner.scan(comp.front())) return r;
  return {};
}

WitnessReport witness_in_component(const GameGraph& g, Vertex v) {
  WitnessScanner scanner(g);
  return scanner.scan(v);
}

}  // namespace degree_game
