#include <doctest.h>

#include "oracles.hpp"
#include "unimap/canon.hpp"
#include "unimap/homology.hpp"

using namespace unimap;

TEST_CASE("interlacement matrices") {
  InterlacementMatrix a = interlacement(parse_word("1 2 -1 -2"));
  CHECK(a.at(0, 1));
  CHECK(a.at(1, 0));
  CHECK_FALSE(a.at(0, 0));

  InterlacementMatrix z = interlacement(parse_word("1 -1 2 -2"));
  CHECK(z.rows == std::vector<std::uint64_t>{0, 0});

  InterlacementMatrix t = interlacement(parse_word("1 2 3 -1 -2 -3"));
  for (int e = 0; e < 3; ++e)
    for (int f = 0; f < 3; ++f) CHECK(t.at(e, f) == (e != f));
}

TEST_CASE("genus from rank") {
  CHECK(genus_from_rank(parse_word("1 2 -1 -2")) == 1);
  CHECK(genus_from_rank(parse_word("1 2 3 -1 -2 -3")) == 1);  // rank 2, rows dependent
  CHECK(genus_from_rank(parse_word("1 2 -1 -2 3 4 -3 -4")) == 2);  // block diagonal
  CHECK(genus_from_rank(parse_word("1 -1 2 -2")) == 0);
}

TEST_CASE("rank identities over all small words") {
  for (int e = 1; e <= 4; ++e)
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      const int rank = gf2_rank(interlacement(m).rows, e);
      CHECK(rank % 2 == 0);
      CHECK(rank / 2 == m.genus());
      CHECK(m.vertex_count() == e - rank + 1);
      // rank is a class invariant
      UnicellularMap canon_rep = UnicellularMap::from_letters(canonical_form(m).word);
      CHECK(gf2_rank(interlacement(canon_rep).rows, e) == rank);
    }
}

TEST_CASE("even partition predicate") {
  CHECK(is_even_partition(parse_word("1 2 3 4 -2 -1 -4 -3")));  // degrees 4,2,2
  CHECK_FALSE(is_even_partition(parse_word("1 2 3 -1 -2 -3")));  // 3,3
  CHECK(is_even_partition(parse_word("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6")));  // 4,4,4
}

TEST_CASE("parity certificate on the square torus") {
  ParityCertificate cert = parity_certificate(parse_word("1 2 -1 -2"));
  CHECK(cert.basis_edges == std::vector<int>{1, 2});
  CHECK(cert.u_edges() == std::vector<int>{1, 2});  // u = (1,1)
}

TEST_CASE("parity certificate rejects odd partitions") {
  CHECK_THROWS_WITH_AS(parity_certificate(parse_word("1 2 3 -1 -2 -3")),
                       doctest::Contains("OddPartition"), MapError);
}

TEST_CASE("every even-partition word with E <= 4 certifies") {
  for (int e = 1; e <= 4; ++e)
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      if (!is_even_partition(m)) continue;
      const InterlacementMatrix a = interlacement(m);
      for (int row = 0; row < a.n; ++row) CHECK(a.rows[row] != 0);
      ParityCertificate cert = parity_certificate(m);
      CHECK(static_cast<int>(cert.basis_edges.size()) == 2 * m.genus());
      for (int row = 0; row < a.n; ++row)
        CHECK(__builtin_parityll(a.rows[row] & cert.u) == 1);
    }
}

TEST_CASE("interlacement row weights are a class invariant") {
  for (int e = 2; e <= 4; ++e)
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      UnicellularMap rep = UnicellularMap::from_letters(canonical_form(m).word);
      auto weights = [](const InterlacementMatrix& a) {
        std::vector<int> out;
        for (auto row : a.rows) out.push_back(__builtin_popcountll(row));
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(weights(interlacement(m)) == weights(interlacement(rep)));
    }
}
