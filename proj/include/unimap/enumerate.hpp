#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "unimap/canon.hpp"
#include "unimap/map.hpp"

namespace unimap {

// Checkpoint for a long enumeration: the last emitted word plus the
// backtracking choice stack that produced it. Resuming continues strictly
// after that word.
struct EnumerationCursor {
  std::vector<Letter> prefix;
  std::vector<int> stack;
};

struct EnumerateOptions {
  int threads = 1;
  std::optional<long long> max_classes;
  std::optional<double> max_seconds;
  const EnumerationCursor* resume = nullptr;
};

struct EnumerationResult {
  long long emitted = 0;
  bool complete = true;
  std::optional<EnumerationCursor> cursor;  // set when a cap interrupted the stream
};

using ClassSink = std::function<void(const CanonicalClass&)>;

// Emits every canonical class with the given degree partition exactly once,
// in lexicographic order of canonical word. Generation works directly in
// canonical position (position 0 holds edge 1 forward); a partial word is
// pruned when a completed rotation orbit has a degree outside the remaining
// multiset, or when some rotation already relabels below the prefix.
// Raises Unrealizable for partitions failing the Euler parity check.
//
// With threads > 1 the backtracking tree is split at a fixed depth into
// independent subtree tasks and the streams are merged in subtree order, so
// the emitted sequence does not depend on the worker count. Caps and resume
// imply sequential execution.
EnumerationResult enumerate_maps(const DegreePartition& degrees, const ClassSink& sink,
                                 const EnumerateOptions& opts = {});

// Same stream without a degree constraint: every canonical class with
// exactly edge_count edges.
EnumerationResult enumerate_with_edges(int edge_count, const ClassSink& sink,
                                       const EnumerateOptions& opts = {});

// Parallel visitation without ordering guarantees; visitor must be
// thread-safe. The visited set is identical for every worker count.
void for_each_class(const DegreePartition& degrees, int threads, const ClassSink& visit);
void for_each_class_with_edges(int edge_count, int threads, const ClassSink& visit);

long long count_maps(const DegreePartition& degrees, int threads = 1);

// All degree partitions admitting a one-face map with exactly edge_count
// edges (even sum and integral nonnegative genus), in a deterministic order.
std::vector<DegreePartition> realizable_partitions(int edge_count);

}  // namespace unimap
