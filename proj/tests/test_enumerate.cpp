#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "unimap/enumerate.hpp"

using namespace unimap;

namespace {

std::vector<std::vector<Letter>> enumerate_all(const DegreePartition& d,
                                               EnumerateOptions opts = {}) {
  std::vector<std::vector<Letter>> out;
  enumerate_maps(d, [&](const CanonicalClass& c) { out.push_back(c.word); }, opts);
  return out;
}

}  // namespace

TEST_CASE("single classes at genus one") {
  CHECK(enumerate_all(DegreePartition({4})) ==
        std::vector<std::vector<Letter>>{{1, 2, -1, -2}});
  CHECK(enumerate_all(DegreePartition({3, 3})) ==
        std::vector<std::vector<Letter>>{{1, 2, 3, -1, -2, -3}});
}

TEST_CASE("unrealizable partitions are rejected") {
  CHECK_THROWS_WITH_AS(count_maps(DegreePartition({2})), doctest::Contains("Unrealizable"),
                       MapError);
  CHECK_THROWS_WITH_AS(count_maps(DegreePartition({3})), doctest::Contains("Unrealizable"),
                       MapError);
}

TEST_CASE("frozen corpus sizes") {
  CHECK(count_maps(DegreePartition({4, 4, 4})) == 6);
  CHECK(count_maps(DegreePartition({3, 3, 3, 3, 3, 3})) == 9);
  CHECK(count_maps(DegreePartition({8})) == 4);
  CHECK(count_maps(DegreePartition({5, 5})) == 7);
}

namespace {

// second route to the frozen counts: plain pairing search with orbit-degree
// feasibility pruning, canonicalized per leaf, no minimality machinery
long long count_by_pruned_pairings(int target_deg, int edges) {
  const int n = 2 * edges;
  std::vector<int> partner(n, -1);
  std::set<std::vector<Letter>> classes;
  auto orbit_ok = [&](int p) {
    int j = p, len = 0;
    do {
      if (partner[j] < 0) return true;
      j = (partner[j] + 1) % n;
      if (++len > target_deg) return false;
    } while (j != p);
    return len == target_deg;
  };
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < n && partner[i] != -1) ++i;
    if (i == n) {
      std::vector<Letter> w(n);
      int next = 1;
      for (int p = 0; p < n; ++p) w[p] = partner[p] > p ? next++ : -w[partner[p]];
      classes.insert(oracle::canonical(w));
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] != -1) continue;
      partner[i] = j;
      partner[j] = i;
      if (orbit_ok(i) && orbit_ok(j)) rec();
      partner[i] = -1;
      partner[j] = -1;
    }
  };
  rec();
  return static_cast<long long>(classes.size());
}

}  // namespace

TEST_CASE("frozen counts agree between canonical backtracking and pairing search") {
  CHECK(count_by_pruned_pairings(4, 6) == 6);
  CHECK(count_by_pruned_pairings(3, 9) == 9);
}

TEST_CASE("oracle equivalence for every partition with E <= 4") {
  for (int e = 1; e <= 4; ++e) {
    std::map<std::vector<int>, std::set<std::vector<Letter>>> ref;
    for (const auto& w : oracle::all_pairing_words(e)) {
      UnicellularMap m = UnicellularMap::from_letters(w);
      ref[m.degrees()].insert(oracle::canonical(w));
    }
    for (const auto& d : realizable_partitions(e)) {
      auto got = enumerate_all(d);
      auto it = ref.find(d.degrees());
      std::set<std::vector<Letter>> want =
          it == ref.end() ? std::set<std::vector<Letter>>{} : it->second;
      CHECK(std::set<std::vector<Letter>>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("stream is sorted, self-canonical, and validates") {
  DegreePartition d({4, 4, 4});
  std::vector<std::vector<Letter>> words;
  enumerate_maps(d, [&](const CanonicalClass& c) {
    UnicellularMap m = UnicellularMap::from_letters(c.word);
    CHECK(m.degrees() == d.degrees());
    CHECK(m.genus() == 2);
    CHECK(oracle::canonical(c.word) == c.word);
    CHECK(oracle::symmetry(c.word) == c.symmetry);
    words.push_back(c.word);
  });
  CHECK(std::is_sorted(words.begin(), words.end(), word_less));
  CHECK(std::set<std::vector<Letter>>(words.begin(), words.end()).size() == words.size());
}

TEST_CASE("worker count does not change the stream") {
  DegreePartition d({3, 3, 3, 3, 3, 3});
  EnumerateOptions two;
  two.threads = 2;
  CHECK(enumerate_all(d) == enumerate_all(d, two));
}

TEST_CASE("caps and resume reproduce the full stream") {
  DegreePartition d({3, 3, 3, 3, 3, 3});
  const auto full = enumerate_all(d);

  EnumerateOptions capped;
  capped.max_classes = 4;
  std::vector<std::vector<Letter>> head;
  EnumerationResult r1 =
      enumerate_maps(d, [&](const CanonicalClass& c) { head.push_back(c.word); }, capped);
  CHECK_FALSE(r1.complete);
  REQUIRE(r1.cursor.has_value());
  CHECK(head.size() == 4);
  CHECK(std::equal(head.begin(), head.end(), full.begin()));

  EnumerateOptions resumed;
  resumed.resume = &*r1.cursor;
  std::vector<std::vector<Letter>> tail;
  EnumerationResult r2 =
      enumerate_maps(d, [&](const CanonicalClass& c) { tail.push_back(c.word); }, resumed);
  CHECK(r2.complete);
  head.insert(head.end(), tail.begin(), tail.end());
  CHECK(head == full);
}

TEST_CASE("realizable partitions with E = 2") {
  // degree sums 4 with integral nonnegative genus: (4), (2,1,1), (1,1,1) is odd-V
  std::vector<std::string> got;
  for (const auto& d : realizable_partitions(2)) got.push_back(d.to_string());
  CHECK(got == std::vector<std::string>{"(4)", "(2,1,1)"});
}

TEST_CASE("count with threads matches sequential") {
  CHECK(count_maps(DegreePartition({3, 3, 3, 3, 3, 3}), 2) == 9);
}
