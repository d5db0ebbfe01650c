#include "unimap/homology.hpp"

#include <algorithm>

namespace unimap {

InterlacementMatrix interlacement(const UnicellularMap& m) {
  const int n = m.edge_count();
  if (n > 64) raise(Err::CapExceeded, "interlacement supports at most 64 edges");
  InterlacementMatrix a;
  a.n = n;
  a.rows.assign(n, 0);
  for (int e = 1; e <= n; ++e) {
    int p1 = m.position_of(e), p2 = m.position_of(-e);
    if (p1 > p2) std::swap(p1, p2);
    for (int f = e + 1; f <= n; ++f) {
      int q1 = m.position_of(f), q2 = m.position_of(-f);
      const bool in1 = p1 < q1 && q1 < p2;
      const bool in2 = p1 < q2 && q2 < p2;
      if (in1 != in2) {
        a.rows[e - 1] |= std::uint64_t(1) << (f - 1);
        a.rows[f - 1] |= std::uint64_t(1) << (e - 1);
      }
    }
  }
  return a;
}

int gf2_rank(std::vector<std::uint64_t> rows, int n) {
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if ((rows[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

int genus_from_rank(const UnicellularMap& m) {
  return gf2_rank(interlacement(m).rows, m.edge_count()) / 2;
}

bool is_even_partition(const UnicellularMap& m) {
  for (int d : m.degrees())
    if (d % 2 != 0) return false;
  return true;
}

std::vector<int> ParityCertificate::u_edges() const {
  std::vector<int> out;
  for (int e = 0; e < 64; ++e)
    if ((u >> e) & 1) out.push_back(e + 1);
  return out;
}

ParityCertificate parity_certificate(const UnicellularMap& m) {
  if (!is_even_partition(m))
    raise(Err::OddPartition,
          "degree partition " + m.degree_partition().to_string() + " has an odd degree");
  const InterlacementMatrix a = interlacement(m);
  const int n = a.n;

  // eliminate [A | 1], tracking original row indices for the basis
  struct Row {
    std::uint64_t bits;
    bool rhs;
    int origin;
  };
  std::vector<Row> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = {a.rows[r], true, r};

  std::vector<int> pivot_col_of;  // per pivot row
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if ((rows[r].bits >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != rank && ((rows[r].bits >> col) & 1)) {
        rows[r].bits ^= rows[rank].bits;
        rows[r].rhs = rows[r].rhs != rows[rank].rhs;
      }
    pivot_col_of.push_back(col);
    ++rank;
  }
  for (int r = rank; r < n; ++r)
    if (rows[r].rhs)
      raise(Err::NoSolution, "A u = 1 is unsolvable on " + m.to_string());

  ParityCertificate cert;
  for (int r = 0; r < rank; ++r) cert.basis_edges.push_back(rows[r].origin + 1);
  std::sort(cert.basis_edges.begin(), cert.basis_edges.end());
  for (int r = 0; r < rank; ++r)
    if (rows[r].rhs) cert.u |= std::uint64_t(1) << pivot_col_of[r];

  // explicit verification of A u = 1
  for (int r = 0; r < n; ++r)
    if (__builtin_parityll(a.rows[r] & cert.u) != 1)
      raise(Err::NoSolution, "certificate verification failed on " + m.to_string());
  return cert;
}

}  // namespace unimap
