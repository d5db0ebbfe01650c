#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unimap/map.hpp"
#include "unimap/surgery.hpp"

namespace unimap {

// The abstract multigraph under a map: vertices are the rotation orbits,
// edge e joins the source vertices of +e and -e. Loops and parallel edges
// are allowed.
struct UnderlyingGraph {
  int vertex_count = 0;
  struct Edge {
    int id;  // 1..E
    int u, v;
  };
  std::vector<Edge> edges;

  bool is_loop(int edge_id) const {
    const Edge& e = edges[edge_id - 1];
    return e.u == e.v;
  }
};

UnderlyingGraph underlying_graph(const UnicellularMap& m);

// Edges whose removal disconnects the underlying graph, ascending ids.
// Loops are never bridges.
std::vector<int> bridges(const UnicellularMap& m);
std::vector<int> bridges(const UnderlyingGraph& g);

struct MatchingResult {
  // edge ids, pairwise vertex-disjoint, covering every vertex; empty optional
  // when no perfect matching exists
  std::optional<std::vector<int>> matching;
  enum class Absent { none, odd_vertex_count, exhausted } reason = Absent::none;
};

// Deterministic first-found matching under ascending edge order
// (exhaustive backtracking; fine at this scale).
MatchingResult perfect_matching(const UnicellularMap& m);

// Cubic maps admitting a perfect matching. Raises NotCubic.
bool is_virtual_collection(const UnicellularMap& m);

struct EliminationStep {
  int designated_bridge = 0;
  SurgeryMove move;
  UnicellularMap result;
  int bridges_after = 0;
};

struct BridgeEliminationTrace {
  std::vector<EliminationStep> steps;
  // bridge counts that failed to drop strictly; reported, never hidden
  std::vector<std::string> monotonicity_notes;
  bool completed = false;  // reached a bridgeless map within the step bound
};

// While a bridge exists: take the smallest bridge e, pick the
// lexicographically least intertwined orientation pair among the edges
// meeting e on its two sides, and apply that surgery. The designated bridge
// must stop being a bridge after its step; the loop is bounded by the
// initial bridge count. Raises NotCubic / NoIntertwinedOrientation.
BridgeEliminationTrace bridge_elimination(const UnicellularMap& m);

}  // namespace unimap
