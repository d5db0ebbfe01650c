#include "unimap/map.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "unimap/rotation.hpp"

namespace unimap {

bool word_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

std::string format_word(const std::vector<Letter>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

DegreePartition::DegreePartition(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_)
    if (d <= 0) raise(Err::MalformedToken, "degrees must be positive");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
}

DegreePartition DegreePartition::parse(std::string_view csv) {
  std::vector<int> out;
  size_t i = 0;
  while (i < csv.size()) {
    size_t j = csv.find(',', i);
    if (j == std::string_view::npos) j = csv.size();
    std::string_view tok = csv.substr(i, j - i);
    int v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v <= 0)
      raise(Err::MalformedToken, "bad degree token '" + std::string(tok) + "'");
    out.push_back(v);
    i = j + 1;
  }
  if (out.empty()) raise(Err::MalformedToken, "empty degree list");
  return DegreePartition(std::move(out));
}

int DegreePartition::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

bool DegreePartition::realizable() const {
  int sum = degree_sum();
  if (degrees_.empty() || sum % 2 != 0) return false;
  int e = sum / 2, v = vertex_count();
  int g2 = e - v + 1;
  return g2 >= 0 && g2 % 2 == 0;
}

int DegreePartition::edge_count() const {
  require_realizable();
  return degree_sum() / 2;
}

int DegreePartition::genus() const {
  require_realizable();
  return (degree_sum() / 2 - vertex_count() + 1) / 2;
}

void DegreePartition::require_realizable() const {
  if (!realizable())
    raise(Err::Unrealizable, "degree partition " + to_string() +
                                 " admits no one-face map (Euler parity)");
}

std::string DegreePartition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out + ")";
}

UnicellularMap::UnicellularMap(std::vector<Letter> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 2 || n % 2 != 0)
    raise(Err::EdgeOccurrenceViolation, "word length must be even and >= 2");
  edges_ = n / 2;
  pos_plus_.assign(edges_ + 1, -1);
  pos_minus_.assign(edges_ + 1, -1);
  for (int i = 0; i < n; ++i) {
    Letter x = word_[i];
    int e = edge_of(x);
    if (e == 0 || e > edges_)
      raise(Err::EdgeOccurrenceViolation,
            "edge id " + std::to_string(e) + " outside 1.." + std::to_string(edges_));
    int& slot = x > 0 ? pos_plus_[e] : pos_minus_[e];
    if (slot != -1)
      raise(Err::EdgeOccurrenceViolation,
            "edge " + std::to_string(e) + " repeats with the same sign");
    slot = i;
  }
  // every id now has exactly one occurrence of each sign

  // vertices: orbits of position -> partner(position) + 1 (mod 2E)
  vertex_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (vertex_of_[i] != -1) continue;
    int v = static_cast<int>(cycles_.size());
    cycles_.emplace_back();
    int j = i;
    while (vertex_of_[j] == -1) {
      vertex_of_[j] = v;
      cycles_.back().push_back(j);
      j = (partner_of(j) + 1) % n;
    }
  }
  const int vcount = static_cast<int>(cycles_.size());
  int g2 = edges_ - vcount + 1;
  if (g2 < 0 || g2 % 2 != 0)
    raise(Err::NonIntegerGenus, "word does not close up to an oriented surface");
  genus_ = g2 / 2;
  degrees_.reserve(vcount);
  for (const auto& c : cycles_) degrees_.push_back(static_cast<int>(c.size()));
  std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
}

UnicellularMap UnicellularMap::from_letters(std::vector<Letter> word) {
  return UnicellularMap(std::move(word));
}

UnicellularMap UnicellularMap::parse(std::string_view text) {
  std::vector<Letter> raw;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    long v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v == 0 ||
        v > 1000000 || v < -1000000)
      raise(Err::MalformedToken, "token '" + std::string(tok) + "' is not a nonzero integer");
    raw.push_back(static_cast<Letter>(v));
    i = j;
  }
  if (raw.empty()) raise(Err::MalformedToken, "empty word");

  // normalize ids to 1..E by first appearance, signs preserved
  std::vector<std::pair<int, int>> relabel;  // (old id, new id)
  std::vector<Letter> word;
  word.reserve(raw.size());
  for (Letter x : raw) {
    int old_id = edge_of(x);
    int new_id = 0;
    for (auto& [o, n] : relabel)
      if (o == old_id) {
        new_id = n;
        break;
      }
    if (new_id == 0) {
      new_id = static_cast<int>(relabel.size()) + 1;
      relabel.emplace_back(old_id, new_id);
    }
    word.push_back(x > 0 ? new_id : -new_id);
  }
  if (relabel.size() * 2 != word.size())
    raise(Err::EdgeOccurrenceViolation,
          "expected every edge id exactly twice, got " + std::to_string(relabel.size()) +
              " ids in a word of length " + std::to_string(word.size()));
  return UnicellularMap(std::move(word));
}

int UnicellularMap::position_of(Letter x) const {
  int e = edge_of(x);
  if (e == 0 || e > edges_) raise(Err::MalformedToken, "no edge " + std::to_string(e));
  return x > 0 ? pos_plus_[e] : pos_minus_[e];
}

int UnicellularMap::partner_of(int pos) const {
  Letter x = word_[pos];
  int e = edge_of(x);
  return x > 0 ? pos_minus_[e] : pos_plus_[e];
}

std::vector<std::vector<Letter>> UnicellularMap::vertex_cycles() const {
  std::vector<std::vector<Letter>> out;
  out.reserve(cycles_.size());
  for (const auto& c : cycles_) {
    std::vector<Letter> cyc;
    cyc.reserve(c.size());
    for (int p : c) cyc.push_back(word_[p]);
    out.push_back(std::move(cyc));
  }
  return out;
}

UnicellularMap parse_word(std::string_view text) { return UnicellularMap::parse(text); }

std::vector<std::vector<Letter>> vertex_structure(const UnicellularMap& m) {
  return m.vertex_cycles();
}

int genus(const UnicellularMap& m) { return m.genus(); }

UnicellularMap subdivide_edge(const UnicellularMap& m, int edge_id) {
  if (edge_id <= 0 || edge_id > m.edge_count())
    raise(Err::MalformedToken, "no edge " + std::to_string(edge_id));
  const Letter fresh = m.edge_count() + 1;
  std::vector<Letter> out;
  out.reserve(m.length() + 2);
  for (Letter x : m.word()) {
    if (x == edge_id) {
      out.push_back(x);
      out.push_back(fresh);
    } else if (x == -edge_id) {
      out.push_back(-fresh);
      out.push_back(x);
    } else {
      out.push_back(x);
    }
  }
  return UnicellularMap::from_letters(std::move(out));
}

UnicellularMap split_vertex(const UnicellularMap& m, int vertex, int arc_start, int arc_len) {
  if (vertex < 0 || vertex >= m.vertex_count())
    raise(Err::InvalidBlock, "no vertex " + std::to_string(vertex));
  const int deg = m.degree_of_vertex(vertex);
  if (deg < 2) raise(Err::InvalidBlock, "vertex degree must be at least 2");
  if (arc_len < 1 || arc_len >= deg)
    raise(Err::InvalidBlock, "arc must be a nonempty proper part of the cycle");
  if (arc_start < 0 || arc_start >= deg) raise(Err::InvalidBlock, "arc start out of range");

  auto cycles = m.vertex_cycles();
  const std::vector<Letter> cyc = cycles[vertex];
  const Letter fresh = m.edge_count() + 1;
  std::vector<Letter> part1, part2;
  for (int k = 0; k < arc_len; ++k) part1.push_back(cyc[(arc_start + k) % deg]);
  part1.push_back(fresh);
  for (int k = arc_len; k < deg; ++k) part2.push_back(cyc[(arc_start + k) % deg]);
  part2.push_back(-fresh);

  std::vector<std::vector<Letter>> new_cycles;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (v == vertex) {
      new_cycles.push_back(part1);
      new_cycles.push_back(part2);
    } else {
      new_cycles.push_back(cycles[v]);
    }
  }
  RotationSystem rs = RotationSystem::from_cycles(m.edge_count() + 1, new_cycles);
  return rs.to_map(m.word()[0]);
}

UnicellularMap collapse_edge(const UnicellularMap& m, int edge_id) {
  if (edge_id <= 0 || edge_id > m.edge_count())
    raise(Err::MalformedToken, "no edge " + std::to_string(edge_id));
  const int u = m.source_vertex(edge_id);
  const int v = m.source_vertex(-edge_id);
  if (u == v) raise(Err::LoopEdge, "edge " + std::to_string(edge_id) + " is a loop");

  auto cycles = m.vertex_cycles();
  auto rotate_to = [](std::vector<Letter>& c, Letter x) {
    auto it = std::find(c.begin(), c.end(), x);
    std::rotate(c.begin(), it, c.end());
  };
  rotate_to(cycles[u], edge_id);
  rotate_to(cycles[v], -edge_id);

  // merged rotation: u's darts after the contracted dart, then v's
  std::vector<Letter> merged;
  merged.insert(merged.end(), cycles[u].begin() + 1, cycles[u].end());
  merged.insert(merged.end(), cycles[v].begin() + 1, cycles[v].end());

  auto renumber = [&](Letter x) -> Letter {
    int e = edge_of(x);
    int ne = e > edge_id ? e - 1 : e;
    return x > 0 ? ne : -ne;
  };
  std::vector<std::vector<Letter>> new_cycles;
  for (int w = 0; w < m.vertex_count(); ++w) {
    if (w == u) {
      std::vector<Letter> c;
      for (Letter x : merged) c.push_back(renumber(x));
      new_cycles.push_back(std::move(c));
    } else if (w == v) {
      continue;
    } else {
      std::vector<Letter> c;
      for (Letter x : cycles[w]) c.push_back(renumber(x));
      new_cycles.push_back(std::move(c));
    }
  }
  RotationSystem rs = RotationSystem::from_cycles(m.edge_count() - 1, new_cycles);
  return rs.to_map(1);
}

UnicellularMap rotation_system_roundtrip(const UnicellularMap& m) {
  RotationSystem rs = RotationSystem::from_map(m);
  return rs.to_map(m.word()[0]);
}

bool equal_up_to_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(s + i) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace unimap
