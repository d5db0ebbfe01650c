#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "unimap/canon.hpp"
#include "unimap/map.hpp"

namespace unimap {

// Oriented edges x, y on distinct edges are intertwined when the cyclic
// order of their four letters is x, x-bar, y, y-bar (pattern 1) or
// x, y-bar, y, x-bar (pattern 2). The interleaved order x, y, x-bar, y-bar
// is deliberately not intertwined: it is exactly the case where the rewrite
// below would cut the single face in two.
//
// Returns 0 (not intertwined), 1 or 2. Raises SameEdge when x, y share an
// underlying edge.
int intertwine_pattern(const UnicellularMap& m, Letter x, Letter y);

bool is_intertwined(const UnicellularMap& m, Letter x, Letter y);

// An ordered pair (a, b) whose four letters sit in the normal-form cyclic
// order a < a-bar < b < b-bar. Pattern-2 pairs (x, y) normalize to
// (y-bar, x-bar), which realizes the same four-letter configuration.
// `positions` witnesses the normal form on the source map (positions of
// a, a-bar, b, b-bar); moves built by hand may leave it unset.
struct SurgeryMove {
  Letter a = 0;
  Letter b = 0;
  std::array<int, 4> positions{-1, -1, -1, -1};
};

// Builds the normal-form move for an intertwined pair, or nullopt.
std::optional<SurgeryMove> make_move(const UnicellularMap& m, Letter x, Letter y);

// The sector-swap rewrite: with the word in the form w1 a w2 a' w3 b w4 b'
// (primes denoting bars), the result is w3 a w2 a' w1 b w4 b'. Edge ids are
// preserved; degree partition and genus are invariant. Raises NotIntertwined
// when the move does not realize the normal form on m.
UnicellularMap surgery(const UnicellularMap& m, const SurgeryMove& mv);
UnicellularMap surgery(const UnicellularMap& m, Letter x, Letter y);

// Applies the move (a, b), then (a-bar, b-bar) on the result. The final map
// is in the same class as m; callers assert canonical equality.
UnicellularMap involution_loop(const UnicellularMap& m, const SurgeryMove& mv);

// All normal-form ordered position pairs on m, ascending.
std::vector<SurgeryMove> all_moves(const UnicellularMap& m);

struct NeighborSet {
  // distinct neighbor classes, sorted by canonical word, each with the first
  // move (in scan order) that produced it
  std::vector<std::pair<CanonicalClass, SurgeryMove>> classes;
  long self_moves = 0;  // moves whose result is isomorphic to the input
};

NeighborSet neighbors(const UnicellularMap& m);

}  // namespace unimap
