#include "unimap/structure.hpp"

#include <algorithm>
#include <functional>

namespace unimap {

UnderlyingGraph underlying_graph(const UnicellularMap& m) {
  UnderlyingGraph g;
  g.vertex_count = m.vertex_count();
  g.edges.reserve(m.edge_count());
  for (int e = 1; e <= m.edge_count(); ++e)
    g.edges.push_back({e, m.source_vertex(e), m.source_vertex(-e)});
  return g;
}

namespace {

struct Adjacency {
  // arcs: (neighbor vertex, edge id); two arcs per non-loop edge, loops skipped
  std::vector<std::vector<std::pair<int, int>>> at;
  explicit Adjacency(const UnderlyingGraph& g) : at(g.vertex_count) {
    for (const auto& e : g.edges) {
      if (e.u == e.v) continue;
      at[e.u].emplace_back(e.v, e.id);
      at[e.v].emplace_back(e.u, e.id);
    }
  }
};

void bridge_dfs(const Adjacency& adj, int u, int entry_edge, int& timer,
                std::vector<int>& disc, std::vector<int>& low, std::vector<int>& out) {
  disc[u] = low[u] = timer++;
  for (const auto& [v, id] : adj.at[u]) {
    if (id == entry_edge) continue;  // do not reuse the entering edge instance
    if (disc[v] == -1) {
      bridge_dfs(adj, v, id, timer, disc, low, out);
      low[u] = std::min(low[u], low[v]);
      if (low[v] > disc[u]) out.push_back(id);
    } else {
      low[u] = std::min(low[u], disc[v]);
    }
  }
}

}  // namespace

std::vector<int> bridges(const UnderlyingGraph& g) {
  Adjacency adj(g);
  std::vector<int> disc(g.vertex_count, -1), low(g.vertex_count, -1), out;
  int timer = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (disc[v] == -1) bridge_dfs(adj, v, 0, timer, disc, low, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bridges(const UnicellularMap& m) { return bridges(underlying_graph(m)); }

MatchingResult perfect_matching(const UnicellularMap& m) {
  MatchingResult res;
  const UnderlyingGraph g = underlying_graph(m);
  if (g.vertex_count % 2 != 0) {
    res.reason = MatchingResult::Absent::odd_vertex_count;
    return res;
  }
  std::vector<std::vector<std::pair<int, int>>> incident(g.vertex_count);
  for (const auto& e : g.edges)
    if (e.u != e.v) {
      incident[e.u].emplace_back(e.id, e.v);
      incident[e.v].emplace_back(e.id, e.u);
    }
  for (auto& lst : incident) std::sort(lst.begin(), lst.end());

  std::vector<char> covered(g.vertex_count, 0);
  std::vector<int> chosen;
  std::function<bool(int)> solve = [&](int v) {
    while (v < g.vertex_count && covered[v]) ++v;
    if (v == g.vertex_count) return true;
    covered[v] = 1;
    for (const auto& [id, w] : incident[v]) {
      if (covered[w]) continue;
      covered[w] = 1;
      chosen.push_back(id);
      if (solve(v + 1)) return true;
      chosen.pop_back();
      covered[w] = 0;
    }
    covered[v] = 0;
    return false;
  };
  if (solve(0)) {
    std::sort(chosen.begin(), chosen.end());
    res.matching = std::move(chosen);
  } else {
    res.reason = MatchingResult::Absent::exhausted;
  }
  return res;
}

bool is_virtual_collection(const UnicellularMap& m) {
  for (int d : m.degrees())
    if (d != 3)
      raise(Err::NotCubic, "degree partition " + m.degree_partition().to_string() +
                               " is not cubic");
  return perfect_matching(m).matching.has_value();
}

namespace {

// vertices reachable from `root` in g with edge `skip` removed
std::vector<char> side_of(const UnderlyingGraph& g, int root, int skip) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    if (e.id == skip || e.u == e.v) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

std::vector<int> edges_at(const UnderlyingGraph& g, int vertex, int skip) {
  std::vector<int> out;
  for (const auto& e : g.edges)
    if (e.id != skip && (e.u == vertex || e.v == vertex)) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());  // loops once
  return out;
}

}  // namespace

BridgeEliminationTrace bridge_elimination(const UnicellularMap& m) {
  for (int d : m.degrees())
    if (d != 3)
      raise(Err::NotCubic, "degree partition " + m.degree_partition().to_string() +
                               " is not cubic");
  BridgeEliminationTrace trace;
  UnicellularMap current = m;
  std::vector<int> current_bridges = bridges(current);
  const int bound = static_cast<int>(current_bridges.size());

  for (int step = 0; step < bound && !current_bridges.empty(); ++step) {
    const int e = current_bridges.front();
    const UnderlyingGraph g = underlying_graph(current);
    const int u = current.source_vertex(e);
    const int v = current.source_vertex(-e);
    const std::vector<char> u_side = side_of(g, u, e);

    std::optional<SurgeryMove> picked;
    for (int e1 : edges_at(g, u, e)) {
      if (picked) break;
      if (!u_side[g.edges[e1 - 1].u] || !u_side[g.edges[e1 - 1].v]) continue;
      for (int e2 : edges_at(g, v, e)) {
        if (picked) break;
        if (u_side[g.edges[e2 - 1].u] || u_side[g.edges[e2 - 1].v]) continue;
        for (Letter x : {Letter(e1), Letter(-e1)}) {
          if (picked) break;
          for (Letter y : {Letter(e2), Letter(-e2)}) {
            if (auto mv = make_move(current, x, y)) {
              picked = mv;
              break;
            }
          }
        }
      }
    }
    if (!picked)
      raise(Err::NoIntertwinedOrientation,
            "no intertwined orientation pair across bridge " + std::to_string(e) + " of " +
                current.to_string());

    UnicellularMap next = surgery(current, *picked);
    std::vector<int> next_bridges = bridges(next);
    if (std::binary_search(next_bridges.begin(), next_bridges.end(), e))
      raise(Err::PropertyFailure, "designated bridge " + std::to_string(e) +
                                      " survived its elimination step on " + current.to_string());
    if (next_bridges.size() >= current_bridges.size())
      trace.monotonicity_notes.push_back(
          "bridge count " + std::to_string(current_bridges.size()) + " -> " +
          std::to_string(next_bridges.size()) + " at step " +
          std::to_string(trace.steps.size()) + " on " + current.to_string());
    trace.steps.push_back(
        {e, *picked, next, static_cast<int>(next_bridges.size())});
    current = std::move(next);
    current_bridges = std::move(next_bridges);
  }
  trace.completed = current_bridges.empty();
  return trace;
}

}  // namespace unimap
