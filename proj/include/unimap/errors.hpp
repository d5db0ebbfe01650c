#pragma once

#include <stdexcept>
#include <string>

namespace unimap {

enum class Err {
  MalformedToken,
  EdgeOccurrenceViolation,
  NonIntegerGenus,
  InvalidBlock,
  LoopEdge,
  NotUnicellular,
  SameEdge,
  NotIntertwined,
  NoIntertwinedOrientation,
  NotCubic,
  OddPartition,
  NoSolution,
  Unrealizable,
  CapExceeded,
  PartialGraph,
  UnknownSuite,
  PropertyFailure,
};

const char* err_name(Err e);

class MapError : public std::runtime_error {
 public:
  MapError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) {
  throw MapError(code, what);
}

}  // namespace unimap
