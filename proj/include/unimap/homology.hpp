#pragma once

#include <cstdint>
#include <vector>

#include "unimap/map.hpp"

namespace unimap {

// Symmetric E x E matrix over GF(2) with zero diagonal: entry (e, f) is 1
// exactly when the two occurrence pairs of edges e and f interleave in the
// cyclic word (orientation ignored, i.e. the chords cross). Its GF(2) rank
// equals twice the genus.
struct InterlacementMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;  // bit f of rows[e] = entry (e+1, f+1)

  bool at(int e, int f) const { return (rows[e] >> f) & 1; }
};

InterlacementMatrix interlacement(const UnicellularMap& m);

int gf2_rank(std::vector<std::uint64_t> rows, int n);

// rank(interlacement)/2; agrees with genus() computed from the vertex count.
int genus_from_rank(const UnicellularMap& m);

bool is_even_partition(const UnicellularMap& m);

// Witness that the edge-loop intersection-parity functional is nonzero on an
// even-partition map: 2g independent rows of A plus a GF(2) solution of
// A u = all-ones.
struct ParityCertificate {
  std::vector<int> basis_edges;  // ascending edge ids, |basis_edges| = 2g
  std::uint64_t u = 0;           // bit e-1 = coefficient of edge e

  std::vector<int> u_edges() const;
};

// Raises OddPartition when some degree is odd, NoSolution when A u = 1 has
// no solution (which would contradict the parity analysis; surfaced, never
// patched over).
ParityCertificate parity_certificate(const UnicellularMap& m);

}  // namespace unimap
