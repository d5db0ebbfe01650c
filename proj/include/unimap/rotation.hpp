#pragma once

#include <vector>

#include "unimap/map.hpp"

namespace unimap {

// A rotation system on edges 1..E: for every dart (oriented edge) x,
// sigma(x) is the next dart counterclockwise around the source vertex of x.
// Faces are the orbits of x -> sigma(bar(x)); a system is unicellular when
// there is exactly one face, and its boundary word is that orbit.
class RotationSystem {
 public:
  static RotationSystem from_map(const UnicellularMap& m);
  // vertex_cycles: each inner vector is one vertex's rotation cycle; the
  // cycles must partition the 2E darts over edges 1..edge_count.
  static RotationSystem from_cycles(int edge_count, const std::vector<std::vector<Letter>>& vertex_cycles);

  int edge_count() const { return edges_; }
  Letter sigma(Letter x) const { return sigma_[dart_index(x)]; }

  int face_count() const;
  // Boundary word starting at dart `start`; raises NotUnicellular when the
  // face through `start` does not cover all darts.
  std::vector<Letter> boundary_word(Letter start) const;
  UnicellularMap to_map(Letter start) const;

 private:
  int dart_index(Letter x) const {
    return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
  }

  int edges_ = 0;
  std::vector<Letter> sigma_;
};

}  // namespace unimap
