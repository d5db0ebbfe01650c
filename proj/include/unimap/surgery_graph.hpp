#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unimap/enumerate.hpp"
#include "unimap/map.hpp"
#include "unimap/surgery.hpp"

namespace unimap {

// Simple undirected graph over canonical classes with surgery adjacency.
// Multi-surgeries between the same pair collapse to one edge; surgeries
// landing back in the source class are kept as per-node counts only.
struct SurgeryGraph {
  enum class Provenance { full_enumeration, seed_closure };

  std::vector<std::vector<Letter>> words;  // node id -> canonical word, lex order
  std::vector<std::vector<int>> adj;       // sorted, deduplicated
  std::vector<long> self_moves;
  std::vector<int> symmetry;
  Provenance provenance = Provenance::full_enumeration;
  bool complete = true;  // false when a cap cut enumeration or closure short

  int node_count() const { return static_cast<int>(words.size()); }
  long long edge_count() const;
  int index_of(const std::vector<Letter>& word) const;  // -1 when absent
};

struct BuildOptions {
  int threads = 1;
  long long max_nodes = 1000000;
};

// Full mode: nodes are exactly the enumeration of the partition, edges from
// the neighbor scan of every node.
SurgeryGraph build_graph(const DegreePartition& degrees, const BuildOptions& opts = {});

// Seed mode: closure of the seeds under surgery, breadth-first; node ids are
// re-sorted into canonical order at the end.
SurgeryGraph build_graph_from_seeds(const std::vector<UnicellularMap>& seeds,
                                    const BuildOptions& opts = {});

// Connected components as sorted lists of node indices, ordered by smallest
// member. Raises PartialGraph on an incomplete graph.
std::vector<std::vector<int>> components(const SurgeryGraph& g);

struct DiameterResult {
  bool infinite = false;
  bool exact = true;  // false when sampled on very large graphs
  long long value = 0;
};

DiameterResult diameter(const SurgeryGraph& g, int threads = 1);

std::vector<int> isolated_nodes(const SurgeryGraph& g);

std::string graph_to_json(const SurgeryGraph& g);
std::string graph_to_dot(const SurgeryGraph& g);

}  // namespace unimap
