#include "unimap/surgery.hpp"

#include <algorithm>
#include <map>

namespace unimap {

int intertwine_pattern(const UnicellularMap& m, Letter x, Letter y) {
  if (edge_of(x) == edge_of(y))
    raise(Err::SameEdge, "letters " + std::to_string(x) + ", " + std::to_string(y) +
                             " lie on the same edge");
  const int n = m.length();
  const int px = m.position_of(x);
  const int rxb = (m.position_of(bar(x)) - px + n) % n;
  const int ry = (m.position_of(y) - px + n) % n;
  const int ryb = (m.position_of(bar(y)) - px + n) % n;
  if (rxb < ry && ry < ryb) return 1;  // x < x' < y < y'
  if (ryb < ry && ry < rxb) return 2;  // x < y' < y < x'
  return 0;
}

bool is_intertwined(const UnicellularMap& m, Letter x, Letter y) {
  return intertwine_pattern(m, x, y) != 0;
}

std::optional<SurgeryMove> make_move(const UnicellularMap& m, Letter x, Letter y) {
  Letter a, b;
  switch (intertwine_pattern(m, x, y)) {
    case 1: a = x, b = y; break;
    case 2: a = bar(y), b = bar(x); break;
    default: return std::nullopt;
  }
  return SurgeryMove{a, b,
                     {m.position_of(a), m.position_of(bar(a)), m.position_of(b),
                      m.position_of(bar(b))}};
}

UnicellularMap surgery(const UnicellularMap& m, const SurgeryMove& mv) {
  const int n = m.length();
  const int pa = m.position_of(mv.a);
  const int pab = (m.position_of(bar(mv.a)) - pa + n) % n;
  const int pb = (m.position_of(mv.b) - pa + n) % n;
  const int pbb = (m.position_of(bar(mv.b)) - pa + n) % n;
  if (!(0 < pab && pab < pb && pb < pbb))
    raise(Err::NotIntertwined, "move (" + std::to_string(mv.a) + "," + std::to_string(mv.b) +
                                   ") is not in normal form on " + m.to_string());
  if (mv.positions[0] >= 0 &&
      mv.positions != std::array<int, 4>{pa, m.position_of(bar(mv.a)), m.position_of(mv.b),
                                         m.position_of(bar(mv.b))})
    raise(Err::NotIntertwined, "move witness does not match this map");

  auto at = [&](int rel) { return m.letter_at((pa + rel) % n); };
  std::vector<Letter> out;
  out.reserve(n);
  // w3 a w2 a' w1 b w4 b'
  for (int i = pab + 1; i < pb; ++i) out.push_back(at(i));   // w3
  out.push_back(mv.a);
  for (int i = 1; i < pab; ++i) out.push_back(at(i));        // w2
  out.push_back(bar(mv.a));
  for (int i = pbb + 1; i < n; ++i) out.push_back(at(i));    // w1
  out.push_back(mv.b);
  for (int i = pb + 1; i < pbb; ++i) out.push_back(at(i));   // w4
  out.push_back(bar(mv.b));
  return UnicellularMap::from_letters(std::move(out));
}

UnicellularMap surgery(const UnicellularMap& m, Letter x, Letter y) {
  auto mv = make_move(m, x, y);
  if (!mv)
    raise(Err::NotIntertwined, "letters " + std::to_string(x) + ", " + std::to_string(y) +
                                   " are not intertwined in " + m.to_string());
  return surgery(m, *mv);
}

UnicellularMap involution_loop(const UnicellularMap& m, const SurgeryMove& mv) {
  UnicellularMap first = surgery(m, mv);
  return surgery(first, bar(mv.a), bar(mv.b));
}

std::vector<SurgeryMove> all_moves(const UnicellularMap& m) {
  const int n = m.length();
  std::vector<SurgeryMove> out;
  for (int i = 0; i < n; ++i) {
    Letter a = m.letter_at(i);
    const int pab = (m.partner_of(i) - i + n) % n;
    for (int j = 0; j < n; ++j) {
      Letter b = m.letter_at(j);
      if (edge_of(a) == edge_of(b)) continue;
      const int pb = (j - i + n) % n;
      const int pbb = (m.partner_of(j) - i + n) % n;
      if (pab < pb && pb < pbb)
        out.push_back(SurgeryMove{a, b, {i, m.partner_of(i), j, m.partner_of(j)}});
    }
  }
  return out;
}

NeighborSet neighbors(const UnicellularMap& m) {
  NeighborSet result;
  const CanonicalClass self = canonical_form(m);
  std::map<std::vector<Letter>, std::pair<int, SurgeryMove>> found;
  for (const SurgeryMove& mv : all_moves(m)) {
    CanonicalClass c = canonical_form(surgery(m, mv));
    if (c.word == self.word) {
      ++result.self_moves;
      continue;
    }
    found.emplace(std::move(c.word), std::make_pair(c.symmetry, mv));
  }
  result.classes.reserve(found.size());
  for (auto& [word, val] : found)
    result.classes.emplace_back(CanonicalClass{word, val.first}, val.second);
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& l, const auto& r) { return word_less(l.first.word, r.first.word); });
  return result;
}

}  // namespace unimap
