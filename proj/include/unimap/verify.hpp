#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unimap/enumerate.hpp"
#include "unimap/map.hpp"

namespace unimap {

struct CheckFailure {
  std::string word;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  long long checks = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;  // observations that are reported, not asserted
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  std::optional<DegreePartition> degrees;  // restrict a suite to one partition
  int threads = 1;
  int edge_cap = 0;  // override the suite's default edge bound (where used)
};

// Suites: euler, card-shuffle, involution, rank-genus, petersen,
// bridge-elim, even-invariant, oracle-small. Raises UnknownSuite.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();

std::string report_to_json(const VerificationReport& r);

}  // namespace unimap
