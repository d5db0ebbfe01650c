#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "unimap/canon.hpp"
#include "unimap/map.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/rotation.hpp"
#include "unimap/umf.hpp"

using namespace unimap;

TEST_CASE("parse: square torus word") {
  UnicellularMap m = parse_word("1 2 -1 -2");
  CHECK(m.edge_count() == 2);
  CHECK(m.vertex_count() == 1);
  CHECK(m.genus() == 1);
  CHECK(m.degrees() == std::vector<int>{4});
}

TEST_CASE("parse: theta word and its rotation cycles") {
  UnicellularMap m = parse_word("1 2 3 -1 -2 -3");
  CHECK(m.vertex_count() == 2);
  CHECK(m.degrees() == std::vector<int>{3, 3});
  CHECK(m.genus() == 1);
  auto cycles = m.vertex_cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Letter>{1, -2, 3});
  CHECK(cycles[1] == std::vector<Letter>{2, -3, -1});
}

TEST_CASE("parse: degree-1 endpoints") {
  UnicellularMap m = parse_word("1 -1 2 -2");
  CHECK(m.vertex_count() == 3);
  CHECK(m.degrees() == std::vector<int>{2, 1, 1});
  CHECK(m.genus() == 0);
}

TEST_CASE("parse: two-curve torus word") {
  UnicellularMap m = parse_word("1 2 3 4 -2 -1 -4 -3");
  CHECK(m.degrees() == std::vector<int>{4, 2, 2});
  CHECK(m.genus() == 1);
}

TEST_CASE("parse: genus two") {
  CHECK(parse_word("1 2 -1 -2 3 4 -3 -4").genus() == 2);
}

TEST_CASE("parse: id normalization keeps signs") {
  UnicellularMap m = parse_word("-3 5 3 -5");
  CHECK(m.word() == std::vector<Letter>{-1, 2, 1, -2});
}

TEST_CASE("parse: rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_word("1 2 1 -2"), doctest::Contains("EdgeOccurrenceViolation"),
                       MapError);
  CHECK_THROWS_WITH_AS(parse_word("1 -1 2"), doctest::Contains("EdgeOccurrenceViolation"),
                       MapError);
  CHECK_THROWS_WITH_AS(parse_word("0 1 -1"), doctest::Contains("MalformedToken"), MapError);
  CHECK_THROWS_WITH_AS(parse_word("1 x -1"), doctest::Contains("MalformedToken"), MapError);
  CHECK_THROWS_WITH_AS(parse_word("1.5 2"), doctest::Contains("MalformedToken"), MapError);
  CHECK_THROWS_WITH_AS(parse_word("   "), doctest::Contains("MalformedToken"), MapError);
}

TEST_CASE("vertex structure matches corner-gluing oracle for E <= 4") {
  for (int e = 1; e <= 4; ++e)
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      CHECK(m.vertex_count() == oracle::vertex_count(w));
      int deg_sum = 0;
      for (int d : m.degrees()) deg_sum += d;
      CHECK(deg_sum == 2 * e);
      CHECK(e - m.vertex_count() + 1 == 2 * m.genus());
    }
}

TEST_CASE("subdivide: fresh false vertex") {
  UnicellularMap m = parse_word("1 2 -1 -2");
  UnicellularMap s = subdivide_edge(m, 1);
  CHECK(s.word() == std::vector<Letter>{1, 3, 2, -3, -1, -2});
  CHECK(s.vertex_count() == 2);
  CHECK(s.degrees() == std::vector<int>{4, 2});
  CHECK(s.genus() == 1);
  CHECK_FALSE(is_isomorphic(m, s));

  UnicellularMap back = collapse_edge(s, 3);
  CHECK(is_isomorphic(m, back));
}

TEST_CASE("split: square torus vertex into a cubic map") {
  UnicellularMap m = parse_word("1 2 -1 -2");
  UnicellularMap s = split_vertex(m, 0, 0, 2);
  CHECK(s.degrees() == std::vector<int>{3, 3});
  CHECK(s.genus() == 1);
  CHECK(is_isomorphic(s, parse_word("1 2 3 -1 -2 -3")));
}

TEST_CASE("split: rejects improper arcs") {
  UnicellularMap m = parse_word("1 2 -1 -2");
  CHECK_THROWS_AS(split_vertex(m, 0, 0, 4), MapError);  // whole cycle
  CHECK_THROWS_AS(split_vertex(m, 0, 0, 0), MapError);
  CHECK_THROWS_AS(split_vertex(m, 3, 0, 1), MapError);  // no such vertex
}

TEST_CASE("split then collapse is the identity up to isomorphism, E <= 4") {
  for (int e = 2; e <= 4; ++e)
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      for (int v = 0; v < m.vertex_count(); ++v) {
        const int deg = m.degree_of_vertex(v);
        if (deg < 2) continue;
        for (int len = 1; len < deg; ++len) {
          UnicellularMap s = split_vertex(m, v, 0, len);
          CHECK(s.vertex_count() == m.vertex_count() + 1);
          CHECK(s.edge_count() == m.edge_count() + 1);
          CHECK(s.genus() == m.genus());
          // degree law: the two parts exceed the split degree by 2
          CHECK(is_isomorphic(collapse_edge(s, s.edge_count()), m));
        }
      }
    }
}

TEST_CASE("collapse: theta contraction and loop rejection") {
  UnicellularMap theta = parse_word("1 2 3 -1 -2 -3");
  for (int e = 1; e <= 3; ++e) {
    UnicellularMap c = collapse_edge(theta, e);
    CHECK(c.degrees() == std::vector<int>{4});
    CHECK(c.genus() == 1);
  }
  CHECK_THROWS_WITH_AS(collapse_edge(parse_word("1 2 -1 -2"), 1),
                       doctest::Contains("LoopEdge"), MapError);
}

TEST_CASE("rotation system roundtrip") {
  for (const char* text : {"1 2 -1 -2", "1 2 3 -1 -2 -3", "1 -1 2 -2", "1 2 -1 -2 3 4 -3 -4"}) {
    UnicellularMap m = parse_word(text);
    CHECK(rotation_system_roundtrip(m).word() == m.word());
  }
}

TEST_CASE("rotation system: two faces is rejected") {
  // two vertices joined by parallel edges, planar: faces = 2
  RotationSystem rs = RotationSystem::from_cycles(2, {{1, 2}, {-1, -2}});
  CHECK(rs.face_count() == 2);
  CHECK_THROWS_WITH_AS(rs.boundary_word(1), doctest::Contains("NotUnicellular"), MapError);
}

TEST_CASE("degree partition realizability") {
  CHECK(DegreePartition({4}).realizable());
  CHECK(DegreePartition({4}).genus() == 1);
  CHECK_FALSE(DegreePartition({2}).realizable());
  CHECK_FALSE(DegreePartition({3}).realizable());
  CHECK(DegreePartition({1, 1}).realizable());
  CHECK(DegreePartition({1, 1}).genus() == 0);
  CHECK(DegreePartition({3, 3, 3, 3, 3, 3}).genus() == 2);
  CHECK_THROWS_WITH_AS(DegreePartition({2}).edge_count(), doctest::Contains("Unrealizable"),
                       MapError);
}

TEST_CASE("local edits preserve genus across the working corpora") {
  for (const char* csv : {"4", "3,3", "4,4,4", "3,3,3,3,3,3"}) {
    unimap::DegreePartition d = unimap::DegreePartition::parse(csv);
    unimap::enumerate_maps(d, [&](const unimap::CanonicalClass& c) {
      UnicellularMap m = UnicellularMap::from_letters(c.word);
      for (int e = 1; e <= m.edge_count(); ++e) {
        UnicellularMap s = subdivide_edge(m, e);
        CHECK(s.genus() == m.genus());
        CHECK(s.vertex_count() == m.vertex_count() + 1);
        CHECK(s.edge_count() == m.edge_count() + 1);
      }
      for (int v = 0; v < m.vertex_count(); ++v) {
        const int deg = m.degree_of_vertex(v);
        if (deg < 2) continue;
        for (int len = 1; len < deg; ++len) {
          UnicellularMap s = split_vertex(m, v, 1 % deg, len);
          CHECK(s.genus() == m.genus());
          // d_v splits into d_j + d_k with d_j + d_k - 2 = d_v
          std::vector<int> expect = m.degrees();
          expect.erase(std::find(expect.begin(), expect.end(), deg));
          expect.push_back(len + 1);
          expect.push_back(deg - len + 1);
          std::sort(expect.begin(), expect.end(), std::greater<int>());
          CHECK(s.degrees() == expect);
        }
      }
      CHECK(rotation_system_roundtrip(m).word() == m.word());
      for (int e = 1; e <= m.edge_count(); ++e) {
        if (m.source_vertex(e) == m.source_vertex(-e)) continue;
        UnicellularMap c2 = collapse_edge(m, e);
        CHECK(c2.genus() == m.genus());
        CHECK(c2.vertex_count() == m.vertex_count() - 1);
      }
    });
  }
}

TEST_CASE("corpus files: comments and blank lines are skipped") {
  std::istringstream in("# header\n1 2 -1 -2\n\n  # indented comment\n1 -1 2 -2\n");
  auto maps = unimap::read_corpus(in);
  REQUIRE(maps.size() == 2);
  CHECK(maps[0].genus() == 1);
  CHECK(maps[1].genus() == 0);
}
