#include "unimap/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <thread>

#include "workers.hpp"

namespace unimap {

namespace {

constexpr int kMaxE = 32;
constexpr int kMaxLen = 2 * kMaxE;

using Clock = std::chrono::steady_clock;

struct RotState {
  std::array<std::uint8_t, kMaxE + 1> local;
  int next_local;
};

// Backtracking over chord structures in first-appearance labeling. At each
// position the candidates are, in letter order: close one of the open chords
// (ascending id), then open a fresh chord. A word is emitted only when no
// rotation relabels strictly below it, which is detected incrementally: each
// live rotation keeps its own first-appearance table and dies at the first
// offset where it compares above the base word.
class Enumerator {
 public:
  Enumerator(int edge_count, const DegreePartition* degrees, const ClassSink& sink,
             const EnumerateOptions& opts)
      : E(edge_count), n(2 * edge_count), sink_(sink), opts_(opts) {
    if (E < 1 || E > kMaxE)
      raise(Err::CapExceeded, "supported edge range is 1.." + std::to_string(kMaxE));
    partner_.fill(-1);
    open_pos_.fill(-1);
    if (degrees) {
      filter_ = true;
      want_.fill(0);
      for (int d : degrees->degrees()) {
        ++want_[d];
        top_degree_ = std::max(top_degree_, d);
      }
      want_v_ = degrees->vertex_count();
      for (int p = 0; p < n; ++p) {
        head_of_tail_[p] = p;
        tail_of_head_[p] = p;
        len_of_head_[p] = 1;
      }
    }
    stack_.reserve(n);
    start_ = Clock::now();
  }

  EnumerationResult run() {
    bool following = false;
    if (opts_.resume) {
      if (static_cast<int>(opts_.resume->stack.size()) != n ||
          static_cast<int>(opts_.resume->prefix.size()) != n)
        raise(Err::MalformedToken, "cursor does not match this enumeration");
      path_ = &opts_.resume->stack;
      following = true;
    }
    dfs(0, following);
    EnumerationResult res;
    res.emitted = emitted_;
    res.complete = !aborted_;
    if (aborted_) {
      if (have_last_)
        res.cursor = last_;
      else if (opts_.resume)
        res.cursor = *opts_.resume;
    }
    return res;
  }

  void collect_frontier(int depth, std::vector<std::vector<int>>& out) {
    frontier_depth_ = depth;
    frontier_ = &out;
    dfs(0, false);
    frontier_depth_ = -1;
    frontier_ = nullptr;
  }

  void run_subtree(const std::vector<int>& prefix_path) {
    subtree_ = &prefix_path;
    dfs(0, false);
    subtree_ = nullptr;
  }

  bool track_cursor_ = true;  // subtree tasks skip cursor bookkeeping

 private:
  struct Frame {
    bool valid = false;
    bool opened = false;
    bool born = false;
    int chord = 0;
    int paired_with = -1;
    size_t killed_base = 0, assigns_base = 0, chain_base = 0;
  };

  bool time_up() {
    if (!opts_.max_seconds) return false;
    if ((++tick_ & 8191) != 0) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > *opts_.max_seconds;
  }

  bool dfs(int t, bool following) {
    if (time_up()) {
      aborted_ = true;
      return false;
    }
    if (frontier_depth_ >= 0 && t == frontier_depth_) {
      frontier_->push_back(stack_);
      return true;
    }
    if (t == n) return emit_leaf(following);

    const int min_idx = following ? (*path_)[t] : 0;
    const int only_idx =
        (subtree_ && t < static_cast<int>(subtree_->size())) ? (*subtree_)[t] : -1;
    int idx = -1;
    for (std::uint64_t mask = open_mask_; mask; mask &= mask - 1) {
      const int k = std::countr_zero(mask) + 1;
      ++idx;
      if (idx < min_idx || (only_idx >= 0 && idx != only_idx)) continue;
      if (!try_place(t, -k, idx, following && idx == min_idx)) return false;
    }
    if (opened_ < E) {
      ++idx;
      if (idx >= min_idx && (only_idx < 0 || idx == only_idx))
        if (!try_place(t, opened_ + 1, idx, following && idx == min_idx)) return false;
    }
    return true;
  }

  bool try_place(int t, Letter letter, int idx, bool follow_child) {
    Frame fr = apply(t, letter);
    bool keep = true;
    if (fr.valid) {
      stack_.push_back(idx);
      keep = dfs(t + 1, follow_child);
      stack_.pop_back();
    }
    undo(t, fr);
    return keep;
  }

  Frame apply(int t, Letter letter) {
    Frame fr;
    fr.killed_base = killed_.size();
    fr.assigns_base = assigns_.size();
    fr.chain_base = chain_ops_.size();
    fr.chord = edge_of(letter);
    letters_[t] = letter;
    if (letter > 0) {
      fr.opened = true;
      ++opened_;
      open_mask_ |= std::uint64_t(1) << (fr.chord - 1);
      open_pos_[fr.chord] = t;
    } else {
      const int s = open_pos_[fr.chord];
      fr.paired_with = s;
      open_mask_ &= ~(std::uint64_t(1) << (fr.chord - 1));
      partner_[s] = t;
      partner_[t] = s;
      if (filter_ &&
          (!add_rotation_edge(t, (s + 1) % n) || !add_rotation_edge(s, (t + 1) % n)))
        return fr;
    }
    if (!update_rotations(t)) return fr;
    if (t >= 1) {
      RotState& rs = rot_[t];
      std::memset(rs.local.data(), 0, rs.local.size());
      rs.local[fr.chord] = 1;
      rs.next_local = 2;
      live_.push_back(t);
      fr.born = true;
    }
    fr.valid = true;
    return fr;
  }

  void undo(int t, const Frame& fr) {
    if (fr.born) {
      for (size_t i = 0; i < live_.size(); ++i)
        if (live_[i] == t) {
          live_[i] = live_.back();
          live_.pop_back();
          break;
        }
    }
    while (assigns_.size() > fr.assigns_base) {
      const auto [j, c] = assigns_.back();
      assigns_.pop_back();
      rot_[j].local[c] = 0;
      --rot_[j].next_local;
    }
    while (killed_.size() > fr.killed_base) {
      live_.push_back(killed_.back());
      killed_.pop_back();
    }
    while (chain_ops_.size() > fr.chain_base) {
      undo_rotation_edge(chain_ops_.back());
      chain_ops_.pop_back();
    }
    if (fr.opened) {
      --opened_;
      open_mask_ &= ~(std::uint64_t(1) << (fr.chord - 1));
      open_pos_[fr.chord] = -1;
    } else {
      partner_[fr.paired_with] = -1;
      partner_[t] = -1;
      open_mask_ |= std::uint64_t(1) << (fr.chord - 1);
      open_pos_[fr.chord] = fr.paired_with;
    }
  }

  // Partial rotation tracking: the pairing fixes sigma edges
  // position -> partner(position)+1 one at a time, so the defined part of the
  // rotation is a set of chains and finished cycles. A finished cycle is a
  // vertex and must take a degree from the multiset; an open chain can only
  // grow, so one longer than every remaining degree is a dead end.
  struct ChainOp {
    int u, v, tv;
    int closed_len;  // > 0 when the edge closed a cycle
  };

  int max_remaining_degree() const {
    for (int d = top_degree_; d >= 1; --d)
      if (want_[d]) return d;
    return 0;
  }

  bool add_rotation_edge(int u, int v) {  // sigma(u) = v
    const int hu = head_of_tail_[u];
    if (hu == v) {
      const int len = len_of_head_[v];
      if (want_[len] == 0) return false;
      --want_[len];
      ++completed_;
      chain_ops_.push_back({u, v, -1, len});
      return true;
    }
    const int tv = tail_of_head_[v];
    head_of_tail_[tv] = hu;
    tail_of_head_[hu] = tv;
    len_of_head_[hu] += len_of_head_[v];
    chain_ops_.push_back({u, v, tv, 0});
    return len_of_head_[hu] <= max_remaining_degree();
  }

  void undo_rotation_edge(const ChainOp& op) {
    if (op.closed_len > 0) {
      ++want_[op.closed_len];
      --completed_;
    } else {
      const int hu = head_of_tail_[op.tv];
      len_of_head_[hu] -= len_of_head_[op.v];
      head_of_tail_[op.tv] = op.v;
      tail_of_head_[hu] = op.u;
    }
  }

  bool update_rotations(int t) {
    const int chord = edge_of(letters_[t]);
    for (size_t i = 0; i < live_.size();) {
      const int j = live_[i];
      RotState& rs = rot_[j];
      int r;
      if (rs.local[chord]) {
        r = 2 * rs.local[chord] - 1;
      } else {
        r = 2 * rs.next_local - 2;
        rs.local[chord] = static_cast<std::uint8_t>(rs.next_local++);
        assigns_.push_back({j, chord});
      }
      const int b = letter_rank(letters_[t - j]);
      if (r < b) return false;
      if (r > b) {
        killed_.push_back(j);
        live_[i] = live_.back();
        live_.pop_back();
      } else {
        ++i;
      }
    }
    return true;
  }

  bool emit_leaf(bool following) {
    int sym = 1;
    for (const int j : live_) {
      RotState rs = rot_[j];  // wrapped offsets are checked on a throwaway copy
      int verdict = 0;
      for (int o = n - j; o < n; ++o) {
        const int chord = edge_of(letters_[o + j - n]);
        int r;
        if (rs.local[chord]) {
          r = 2 * rs.local[chord] - 1;
        } else {
          r = 2 * rs.next_local - 2;
          rs.local[chord] = static_cast<std::uint8_t>(rs.next_local++);
        }
        const int b = letter_rank(letters_[o]);
        if (r != b) {
          verdict = r < b ? -1 : 1;
          break;
        }
      }
      if (verdict < 0) return true;  // some rotation relabels lower: not canonical
      if (verdict == 0) ++sym;
    }
    if (following) {
      if (!std::equal(letters_.begin(), letters_.begin() + n, opts_.resume->prefix.begin()))
        raise(Err::MalformedToken, "cursor replay mismatch");
      return true;  // already emitted before the checkpoint
    }
    CanonicalClass c;
    c.word.assign(letters_.begin(), letters_.begin() + n);
    c.symmetry = sym;
    sink_(c);
    ++emitted_;
    if (track_cursor_) {
      last_.prefix = c.word;
      last_.stack = stack_;
      have_last_ = true;
    }
    if (opts_.max_classes && emitted_ >= *opts_.max_classes) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  const int E, n;
  const ClassSink& sink_;
  const EnumerateOptions& opts_;

  bool filter_ = false;
  std::array<int, kMaxLen + 1> want_{};
  int want_v_ = 0;

  std::array<int, kMaxLen> partner_;
  std::array<Letter, kMaxLen> letters_{};
  std::array<int, kMaxE + 1> open_pos_;
  std::uint64_t open_mask_ = 0;
  int opened_ = 0;
  int completed_ = 0;

  std::array<int, kMaxLen> head_of_tail_;
  std::array<int, kMaxLen> tail_of_head_;
  std::array<int, kMaxLen> len_of_head_;
  int top_degree_ = 0;
  std::vector<ChainOp> chain_ops_;

  std::array<RotState, kMaxLen> rot_;
  std::vector<int> live_;
  std::vector<int> killed_;
  std::vector<std::pair<int, int>> assigns_;

  std::vector<int> stack_;
  const std::vector<int>* path_ = nullptr;
  const std::vector<int>* subtree_ = nullptr;
  int frontier_depth_ = -1;
  std::vector<std::vector<int>>* frontier_ = nullptr;

  long long emitted_ = 0;
  bool aborted_ = false;
  unsigned tick_ = 0;
  Clock::time_point start_;

  EnumerationCursor last_;
  bool have_last_ = false;
};

EnumerationResult run_ordered(int E, const DegreePartition* degrees, const ClassSink& sink,
                              const EnumerateOptions& opts) {
  const bool sequential =
      opts.threads <= 1 || opts.resume || opts.max_classes || opts.max_seconds || 2 * E <= 8;
  if (sequential) {
    Enumerator en(E, degrees, sink, opts);
    return en.run();
  }

  const int depth = std::min(8, 2 * E - 2);
  std::vector<std::vector<int>> frontier;
  EnumerateOptions plain;
  ClassSink ignore = [](const CanonicalClass&) {};
  {
    Enumerator en(E, degrees, ignore, plain);
    en.collect_frontier(depth, frontier);
  }
  std::vector<std::vector<CanonicalClass>> buckets(frontier.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      ClassSink local = [&buckets, i](const CanonicalClass& c) { buckets[i].push_back(c); };
      Enumerator en(E, degrees, local, plain);
      en.track_cursor_ = false;
      en.run_subtree(frontier[i]);
    }
  };
  detail::run_workers(opts.threads, work);

  EnumerationResult res;
  for (auto& b : buckets)
    for (auto& c : b) {
      sink(c);
      ++res.emitted;
    }
  return res;
}

void run_unordered(int E, const DegreePartition* degrees, int threads, const ClassSink& visit) {
  EnumerateOptions plain;
  if (threads <= 1 || 2 * E <= 8) {
    Enumerator en(E, degrees, visit, plain);
    en.track_cursor_ = false;
    en.run();
    return;
  }
  const int depth = std::min(8, 2 * E - 2);
  std::vector<std::vector<int>> frontier;
  ClassSink ignore = [](const CanonicalClass&) {};
  {
    Enumerator en(E, degrees, ignore, plain);
    en.collect_frontier(depth, frontier);
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      Enumerator en(E, degrees, visit, plain);
      en.track_cursor_ = false;
      en.run_subtree(frontier[i]);
    }
  };
  detail::run_workers(threads, work);
}

}  // namespace

EnumerationResult enumerate_maps(const DegreePartition& degrees, const ClassSink& sink,
                                 const EnumerateOptions& opts) {
  degrees.require_realizable();
  return run_ordered(degrees.edge_count(), &degrees, sink, opts);
}

EnumerationResult enumerate_with_edges(int edge_count, const ClassSink& sink,
                                       const EnumerateOptions& opts) {
  return run_ordered(edge_count, nullptr, sink, opts);
}

void for_each_class(const DegreePartition& degrees, int threads, const ClassSink& visit) {
  degrees.require_realizable();
  run_unordered(degrees.edge_count(), &degrees, threads, visit);
}

void for_each_class_with_edges(int edge_count, int threads, const ClassSink& visit) {
  run_unordered(edge_count, nullptr, threads, visit);
}

long long count_maps(const DegreePartition& degrees, int threads) {
  std::atomic<long long> count{0};
  for_each_class(degrees, threads, [&count](const CanonicalClass&) { ++count; });
  return count.load();
}

std::vector<DegreePartition> realizable_partitions(int edge_count) {
  std::vector<DegreePartition> out;
  std::vector<int> parts;
  const int total = 2 * edge_count;
  // descending partitions of 2E
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      DegreePartition d(parts);
      if (d.realizable()) out.push_back(d);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(total, total);
  return out;
}

}  // namespace unimap
