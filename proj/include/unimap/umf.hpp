#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unimap/map.hpp"

namespace unimap {

// UMF v1: one map per line of whitespace-separated nonzero signed integers;
// +k is edge k forward, -k reverse, each |k| exactly once with each sign.
// Blank lines and lines starting with '#' are ignored.
std::vector<UnicellularMap> read_corpus(std::istream& in);
std::vector<UnicellularMap> read_corpus_file(const std::string& path);

void write_corpus(std::ostream& out, const std::vector<std::vector<Letter>>& words);

}  // namespace unimap
