#include "unimap/canon.hpp"

namespace unimap {

std::vector<Letter> relabeled_rotation(const std::vector<Letter>& word, int start) {
  const int n = static_cast<int>(word.size());
  std::vector<int> new_id(n / 2 + 1, 0);
  int next = 1;
  std::vector<Letter> out;
  out.reserve(n);
  for (int o = 0; o < n; ++o) {
    int e = edge_of(word[(start + o) % n]);
    if (new_id[e] == 0) {
      new_id[e] = next++;
      out.push_back(new_id[e]);
    } else {
      out.push_back(-new_id[e]);
    }
  }
  return out;
}

CanonicalClass canonical_form(const UnicellularMap& m) {
  const auto& w = m.word();
  const int n = m.length();

  std::vector<Letter> best = relabeled_rotation(w, 0);
  int sym = 1;

  std::vector<int> new_id(m.edge_count() + 1, 0);
  std::vector<int> touched;
  touched.reserve(m.edge_count());
  for (int start = 1; start < n; ++start) {
    int next = 1;
    int cmp = 0;  // -1: this rotation is the new minimum, +1: dominated
    std::vector<Letter> cand;
    for (int o = 0; o < n; ++o) {
      int e = edge_of(w[(start + o) % n]);
      Letter rel;
      if (new_id[e] == 0) {
        new_id[e] = next++;
        touched.push_back(e);
        rel = new_id[e];
      } else {
        rel = -new_id[e];
      }
      if (cmp == 0) {
        int r = letter_rank(rel), b = letter_rank(best[o]);
        if (r < b) {
          cmp = -1;
          cand.assign(best.begin(), best.begin() + o);
          cand.push_back(rel);
        } else if (r > b) {
          cmp = 1;
          break;
        }
      } else {
        cand.push_back(rel);
      }
    }
    if (cmp < 0) {
      best = std::move(cand);
      sym = 1;
    } else if (cmp == 0) {
      ++sym;
    }
    for (int e : touched) new_id[e] = 0;
    touched.clear();
  }
  return CanonicalClass{std::move(best), sym};
}

bool is_isomorphic(const UnicellularMap& a, const UnicellularMap& b) {
  if (a.length() != b.length()) return false;
  return canonical_form(a).word == canonical_form(b).word;
}

int symmetry_count(const UnicellularMap& m) { return canonical_form(m).symmetry; }

}  // namespace unimap
