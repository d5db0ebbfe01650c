#include "unimap/errors.hpp"

namespace unimap {

const char* err_name(Err e) {
  switch (e) {
    case Err::MalformedToken: return "MalformedToken";
    case Err::EdgeOccurrenceViolation: return "EdgeOccurrenceViolation";
    case Err::NonIntegerGenus: return "NonIntegerGenus";
    case Err::InvalidBlock: return "InvalidBlock";
    case Err::LoopEdge: return "LoopEdge";
    case Err::NotUnicellular: return "NotUnicellular";
    case Err::SameEdge: return "SameEdge";
    case Err::NotIntertwined: return "NotIntertwined";
    case Err::NoIntertwinedOrientation: return "NoIntertwinedOrientation";
    case Err::NotCubic: return "NotCubic";
    case Err::OddPartition: return "OddPartition";
    case Err::NoSolution: return "NoSolution";
    case Err::Unrealizable: return "Unrealizable";
    case Err::CapExceeded: return "CapExceeded";
    case Err::PartialGraph: return "PartialGraph";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::PropertyFailure: return "PropertyFailure";
  }
  return "UnknownError";
}

}  // namespace unimap
