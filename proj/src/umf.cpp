#include "unimap/umf.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace unimap {

std::vector<UnicellularMap> read_corpus(std::istream& in) {
  std::vector<UnicellularMap> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    out.push_back(UnicellularMap::parse(line));
  }
  return out;
}

std::vector<UnicellularMap> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::MalformedToken, "cannot open " + path);
  return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<std::vector<Letter>>& words) {
  for (const auto& w : words) out << format_word(w) << '\n';
}

}  // namespace unimap
