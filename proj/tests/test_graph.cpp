#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "unimap/canon.hpp"
#include "unimap/surgery_graph.hpp"

using namespace unimap;

TEST_CASE("one-node graphs at genus one") {
  SurgeryGraph g4 = build_graph(DegreePartition({4}));
  CHECK(g4.node_count() == 1);
  CHECK(g4.edge_count() == 0);
  CHECK(components(g4).size() == 1);
  CHECK(diameter(g4).value == 0);
  CHECK(isolated_nodes(g4) == std::vector<int>{0});

  SurgeryGraph g33 = build_graph(DegreePartition({3, 3}));
  CHECK(g33.node_count() == 1);
  CHECK(components(g33).size() == 1);
}

TEST_CASE("genus-2 collections: frozen shape") {
  SurgeryGraph g = build_graph(DegreePartition({4, 4, 4}), {2, 1000000});
  CHECK(g.node_count() == 6);
  CHECK(g.edge_count() == 7);
  CHECK(components(g).size() == 1);
  DiameterResult d = diameter(g, 2);
  CHECK_FALSE(d.infinite);
  CHECK(d.exact);
  CHECK(d.value == 3);
  CHECK(isolated_nodes(g).empty());
}

TEST_CASE("genus-2 cubic graph: frozen shape") {
  SurgeryGraph g = build_graph(DegreePartition({3, 3, 3, 3, 3, 3}), {2, 1000000});
  CHECK(g.node_count() == 9);
  CHECK(g.edge_count() == 22);
  CHECK(components(g).size() == 1);
  CHECK(diameter(g, 2).value == 2);
}

TEST_CASE("adjacency is symmetric and loop-free") {
  SurgeryGraph g = build_graph(DegreePartition({4, 4, 4}));
  for (int i = 0; i < g.node_count(); ++i)
    for (int j : g.adj[i]) {
      CHECK(j != i);
      CHECK(std::binary_search(g.adj[j].begin(), g.adj[j].end(), i));
    }
}

TEST_CASE("triangle inequality on pairwise distances") {
  SurgeryGraph g = build_graph(DegreePartition({4, 4, 4}));
  const int n = g.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::vector<int> q{s};
    dist[s][s] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (int w : g.adj[q[h]])
        if (dist[s][w] == -1) {
          dist[s][w] = dist[s][q[h]] + 1;
          q.push_back(w);
        }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        CHECK(dist[u][w] <= dist[u][v] + dist[v][w]);
}

TEST_CASE("disconnected partitions") {
  SurgeryGraph g8 = build_graph(DegreePartition({8}));
  CHECK(g8.node_count() == 4);
  CHECK(components(g8).size() == 2);
  CHECK(diameter(g8).infinite);

  SurgeryGraph g55 = build_graph(DegreePartition({5, 5}));
  CHECK(g55.node_count() == 7);
  CHECK(components(g55).size() == 2);
}

TEST_CASE("seed mode: an isolated seed stays alone") {
  SurgeryGraph g = build_graph_from_seeds({parse_word("1 2 3 4 -1 -2 -3 -4")});
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("seed mode closure matches the full component") {
  // seeding one cubic genus-2 map must recover the whole (connected) graph
  SurgeryGraph full = build_graph(DegreePartition({3, 3, 3, 3, 3, 3}));
  SurgeryGraph seeded =
      build_graph_from_seeds({UnicellularMap::from_letters(full.words[0])});
  CHECK(seeded.words == full.words);
  CHECK(seeded.adj == full.adj);
}

TEST_CASE("capped builds refuse connectivity queries") {
  SurgeryGraph g = build_graph(DegreePartition({4, 4, 4}), {1, 2});
  CHECK_FALSE(g.complete);
  CHECK_THROWS_WITH_AS(components(g), doctest::Contains("PartialGraph"), MapError);
  CHECK_THROWS_WITH_AS(diameter(g), doctest::Contains("PartialGraph"), MapError);
}

TEST_CASE("node count equals count_maps") {
  DegreePartition d({4, 4, 4});
  CHECK(build_graph(d).node_count() == count_maps(d));
}

TEST_CASE("json export shape") {
  SurgeryGraph g = build_graph(DegreePartition({3, 3}));
  auto j = nlohmann::json::parse(graph_to_json(g));
  REQUIRE(j.contains("nodes"));
  REQUIRE(j.contains("edges"));
  CHECK(j["nodes"].size() == 1);
  CHECK(j["nodes"][0]["word"] == "1 2 3 -1 -2 -3");
  CHECK(j["nodes"][0]["genus"] == 1);
  CHECK(j["edges"].empty());

  SurgeryGraph big = build_graph(DegreePartition({4, 4, 4}));
  auto jb = nlohmann::json::parse(graph_to_json(big));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : jb["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(edges.size() == 7);
}

TEST_CASE("dot export mentions every canonical word") {
  SurgeryGraph g = build_graph(DegreePartition({3, 3}));
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("1 2 3 -1 -2 -3") != std::string::npos);
  CHECK(dot.find("graph") == 0);
}

TEST_CASE("the single theta node is isolated by definition") {
  SurgeryGraph g = build_graph(DegreePartition({3, 3}));
  CHECK(isolated_nodes(g) == std::vector<int>{0});
}

TEST_CASE("the interleaved one-vertex word is an isolated node of its graph") {
  SurgeryGraph g = build_graph(DegreePartition({8}));
  UnicellularMap w = parse_word("1 2 3 4 -1 -2 -3 -4");
  const int idx = g.index_of(canonical_form(w).word);
  REQUIRE(idx >= 0);
  auto isolated = isolated_nodes(g);
  CHECK(std::find(isolated.begin(), isolated.end(), idx) != isolated.end());
}

// heavier sweep, registered as its own ctest entry
TEST_CASE("genus-3: cubic graph connected, collection diameter in bounds") {
  SurgeryGraph cubic = build_graph(DegreePartition(std::vector<int>(10, 3)), {2, 1000000});
  CHECK(cubic.node_count() == 1726);
  CHECK(components(cubic).size() == 1);

  SurgeryGraph coll = build_graph(DegreePartition(std::vector<int>(5, 4)), {2, 1000000});
  CHECK(coll.node_count() == 510);
  CHECK(components(coll).size() == 1);
  DiameterResult d = diameter(coll, 2);
  CHECK(d.value == 6);
  CHECK((5 <= d.value && d.value <= 42));
}
