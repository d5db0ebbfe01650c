#pragma once

#include <vector>

#include "unimap/map.hpp"

namespace unimap {

// Canonical representative of a map class under rotation and relabeling
// (orientation-preserving only: the word is never reversed).
struct CanonicalClass {
  std::vector<Letter> word;  // lexicographic minimum over all rotations,
                             // relabeled by first appearance
  int symmetry = 1;          // rotations whose relabeling equals the minimum

  bool operator==(const CanonicalClass& o) const { return word == o.word; }
  bool operator<(const CanonicalClass& o) const { return word_less(word, o.word); }
};

// O(E^2): one relabeling pass per rotation, with early exit on mismatch.
CanonicalClass canonical_form(const UnicellularMap& m);

// Relabeling of `word` by first appearance as seen from rotation offset
// `start`; first occurrences are deemed forward.
std::vector<Letter> relabeled_rotation(const std::vector<Letter>& word, int start);

bool is_isomorphic(const UnicellularMap& a, const UnicellularMap& b);

int symmetry_count(const UnicellularMap& m);

}  // namespace unimap
