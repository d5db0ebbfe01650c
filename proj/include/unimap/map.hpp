#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unimap/errors.hpp"

namespace unimap {

// An oriented edge of a map with edges 1..E is a nonzero signed id:
// +k traverses edge k forward, -k traverses it in reverse.
using Letter = std::int32_t;

inline Letter bar(Letter x) { return -x; }
inline int edge_of(Letter x) { return x < 0 ? -x : x; }
inline bool is_forward(Letter x) { return x > 0; }

// Total order on letters: +1 < -1 < +2 < -2 < ...  (positive first at equal
// magnitude). Canonical words are lexicographic minima under this order.
inline int letter_rank(Letter x) {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}
inline Letter letter_from_rank(int r) {
  return (r & 1) ? -(r / 2 + 1) : r / 2 + 1;
}

bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b);

std::string format_word(const std::vector<Letter>& word);

// Multiset of vertex degrees, stored sorted descending.
class DegreePartition {
 public:
  DegreePartition() = default;
  explicit DegreePartition(std::vector<int> degrees);
  static DegreePartition parse(std::string_view csv);  // "3,3,3,3,3,3"

  const std::vector<int>& degrees() const { return degrees_; }
  int vertex_count() const { return static_cast<int>(degrees_.size()); }
  int degree_sum() const;
  bool realizable() const;  // even sum, genus a nonnegative integer
  int edge_count() const;   // requires realizable()
  int genus() const;        // requires realizable()
  void require_realizable() const;
  std::string to_string() const;

  bool operator==(const DegreePartition& o) const { return degrees_ == o.degrees_; }

 private:
  std::vector<int> degrees_;
};

// A graph embedded in a closed oriented surface with a single face,
// represented by the cyclic word of its 2E oriented edges along the face
// boundary. Each edge id occurs exactly once with each sign. Vertices are
// the orbits of sigma, where sigma(x) is the letter following bar(x) in the
// cyclic word; the genus is (E - V + 1) / 2.
//
// Values are immutable after construction; every operation below is a pure
// function returning a fresh map.
class UnicellularMap {
 public:
  // Parses whitespace-separated signed decimal integers and normalizes edge
  // ids to 1..E in order of first appearance (signs preserved).
  static UnicellularMap parse(std::string_view text);

  // Validates a word as-is; ids must already be exactly 1..E.
  static UnicellularMap from_letters(std::vector<Letter> word);

  int edge_count() const { return edges_; }
  int vertex_count() const { return static_cast<int>(cycles_.size()); }
  int genus() const { return genus_; }
  int length() const { return static_cast<int>(word_.size()); }

  const std::vector<Letter>& word() const { return word_; }
  std::string to_string() const { return format_word(word_); }

  int position_of(Letter x) const;
  Letter letter_at(int pos) const { return word_[pos]; }
  int partner_of(int pos) const;  // position of the other occurrence of the edge
  int vertex_at(int pos) const { return vertex_of_[pos]; }
  int source_vertex(Letter x) const { return vertex_of_[position_of(x)]; }

  // Rotation cycles as word positions; cycle v starts at its smallest
  // position and follows sigma. Vertices are indexed in order of smallest
  // position.
  const std::vector<std::vector<int>>& vertex_cycle_positions() const { return cycles_; }
  std::vector<std::vector<Letter>> vertex_cycles() const;

  const std::vector<int>& degrees() const { return degrees_; }  // sorted descending
  DegreePartition degree_partition() const { return DegreePartition(degrees_); }
  int degree_of_vertex(int v) const { return static_cast<int>(cycles_[v].size()); }

  bool same_word(const UnicellularMap& o) const { return word_ == o.word_; }

 private:
  explicit UnicellularMap(std::vector<Letter> word);

  std::vector<Letter> word_;
  int edges_ = 0;
  int genus_ = 0;
  std::vector<int> pos_plus_, pos_minus_;  // indexed by edge id, [0] unused
  std::vector<int> vertex_of_;             // per position
  std::vector<std::vector<int>> cycles_;
  std::vector<int> degrees_;
};

UnicellularMap parse_word(std::string_view text);

std::vector<std::vector<Letter>> vertex_structure(const UnicellularMap& m);

int genus(const UnicellularMap& m);

// Inserts a degree-2 vertex on edge e: occurrence e becomes e e' and
// occurrence e-bar becomes e'-bar e-bar for the fresh id e' = E+1.
UnicellularMap subdivide_edge(const UnicellularMap& m, int edge_id);

// Splits vertex v along a contiguous proper arc of its rotation cycle:
// the arc [arc_start, arc_start+arc_len) keeps one copy, the rest the other,
// joined by a fresh edge E+1. Degrees of the two parts sum to deg(v) + 2.
UnicellularMap split_vertex(const UnicellularMap& m, int vertex, int arc_start, int arc_len);

// Contracts a non-loop edge, merging its endpoints. Remaining edges are
// renumbered down to 1..E-1 preserving id order.
UnicellularMap collapse_edge(const UnicellularMap& m, int edge_id);

// Word -> rotation system -> word; the result equals the input exactly.
UnicellularMap rotation_system_roundtrip(const UnicellularMap& m);

bool equal_up_to_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b);

}  // namespace unimap
