#include "unimap/rotation.hpp"

namespace unimap {

RotationSystem RotationSystem::from_map(const UnicellularMap& m) {
  RotationSystem rs;
  rs.edges_ = m.edge_count();
  rs.sigma_.assign(2 * rs.edges_, 0);
  const auto& w = m.word();
  const int n = m.length();
  for (int i = 0; i < n; ++i) {
    // sigma(x) = successor of bar(x) in the cyclic word
    Letter x = w[i];
    Letter next = w[(m.partner_of(i) + 1) % n];
    rs.sigma_[rs.dart_index(x)] = next;
  }
  return rs;
}

RotationSystem RotationSystem::from_cycles(int edge_count,
                                           const std::vector<std::vector<Letter>>& vertex_cycles) {
  RotationSystem rs;
  rs.edges_ = edge_count;
  rs.sigma_.assign(2 * edge_count, 0);
  int seen = 0;
  for (const auto& cyc : vertex_cycles) {
    if (cyc.empty()) raise(Err::MalformedToken, "empty rotation cycle");
    for (size_t k = 0; k < cyc.size(); ++k) {
      Letter x = cyc[k];
      int e = edge_of(x);
      if (e == 0 || e > edge_count) raise(Err::MalformedToken, "dart outside edge range");
      int idx = rs.dart_index(x);
      if (rs.sigma_[idx] != 0) raise(Err::MalformedToken, "dart listed twice in rotation cycles");
      rs.sigma_[idx] = cyc[(k + 1) % cyc.size()];
      ++seen;
    }
  }
  if (seen != 2 * edge_count)
    raise(Err::MalformedToken, "rotation cycles must cover all darts exactly once");
  return rs;
}

int RotationSystem::face_count() const {
  std::vector<char> visited(sigma_.size(), 0);
  int faces = 0;
  for (int e = 1; e <= edges_; ++e) {
    for (Letter start : {Letter(e), Letter(-e)}) {
      if (visited[dart_index(start)]) continue;
      ++faces;
      Letter x = start;
      do {
        visited[dart_index(x)] = 1;
        x = sigma(bar(x));
      } while (x != start);
    }
  }
  return faces;
}

std::vector<Letter> RotationSystem::boundary_word(Letter start) const {
  std::vector<Letter> word;
  word.reserve(sigma_.size());
  Letter x = start;
  do {
    word.push_back(x);
    x = sigma(bar(x));
  } while (x != start && word.size() <= sigma_.size());
  if (word.size() != sigma_.size())
    raise(Err::NotUnicellular,
          "rotation system has " + std::to_string(face_count()) + " faces");
  return word;
}

UnicellularMap RotationSystem::to_map(Letter start) const {
  return UnicellularMap::from_letters(boundary_word(start));
}

}  // namespace unimap
