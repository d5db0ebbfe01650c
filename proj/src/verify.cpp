#include "unimap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <tuple>
#include <mutex>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "unimap/homology.hpp"
#include "unimap/structure.hpp"
#include "unimap/surgery.hpp"

namespace unimap {

namespace {

using Clock = std::chrono::steady_clock;

// thread-safe failure/note collector; output is sorted for determinism
struct Collector {
  std::mutex mu;
  std::atomic<long long> checks{0};
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  void fail(const std::string& word, const std::string& detail) {
    std::lock_guard<std::mutex> lock(mu);
    failures.push_back({word, detail});
  }
  void note(const std::string& text) {
    std::lock_guard<std::mutex> lock(mu);
    notes.push_back(text);
  }
  void finish(VerificationReport& r) {
    r.checks = checks.load();
    std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) {
      return std::tie(a.word, a.detail) < std::tie(b.word, b.detail);
    });
    std::sort(notes.begin(), notes.end());
    r.failures = std::move(failures);
    r.notes = std::move(notes);
  }
};

// Independent vertex count: glue the polygon corners. Corner i sits before
// side i; side i is glued to its partner reversed, which identifies corner i
// with the corner after the partner.
int vertex_count_by_corner_gluing(const UnicellularMap& m) {
  const int n = m.length();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    int a = find(i), b = find((m.partner_of(i) + 1) % n);
    if (a != b) parent[a] = b;
  }
  int roots = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

// Sector swap done over an explicitly rotated copy; used to cross-check the
// production rewrite.
std::vector<Letter> sector_swap_reference(const UnicellularMap& m, const SurgeryMove& mv) {
  std::vector<Letter> w = m.word();
  std::rotate(w.begin(), w.begin() + m.position_of(mv.a), w.end());
  auto ia = std::find(w.begin(), w.end(), bar(mv.a));
  auto ib = std::find(w.begin(), w.end(), mv.b);
  auto ibb = std::find(w.begin(), w.end(), bar(mv.b));
  std::vector<Letter> out;
  out.insert(out.end(), ia + 1, ib);       // w3
  out.push_back(mv.a);
  out.insert(out.end(), w.begin() + 1, ia);  // w2
  out.push_back(bar(mv.a));
  out.insert(out.end(), ibb + 1, w.end());   // w1
  out.push_back(mv.b);
  out.insert(out.end(), ib + 1, ibb);        // w4
  out.push_back(bar(mv.b));
  return out;
}

std::vector<DegreePartition> default_corpora(const VerifyOptions& opts, bool cubic_only) {
  if (opts.degrees) return {*opts.degrees};
  std::vector<DegreePartition> out;
  out.push_back(DegreePartition({3, 3}));
  out.push_back(DegreePartition({3, 3, 3, 3, 3, 3}));
  if (!cubic_only) {
    out.push_back(DegreePartition({4}));
    out.push_back(DegreePartition({4, 4, 4}));
  }
  return out;
}

void for_corpus(const std::vector<DegreePartition>& corpora, int threads,
                const std::function<void(const UnicellularMap&)>& visit) {
  for (const auto& d : corpora)
    for_each_class(d, threads, [&](const CanonicalClass& c) {
      visit(UnicellularMap::from_letters(c.word));
    });
}

void for_edge_range(const VerifyOptions& opts, int default_cap,
                    const std::function<void(const UnicellularMap&)>& visit) {
  if (opts.degrees) {
    for_each_class(*opts.degrees, opts.threads, [&](const CanonicalClass& c) {
      visit(UnicellularMap::from_letters(c.word));
    });
    return;
  }
  const int cap = opts.edge_cap > 0 ? opts.edge_cap : default_cap;
  for (int e = 1; e <= cap; ++e)
    for_each_class_with_edges(e, opts.threads, [&](const CanonicalClass& c) {
      visit(UnicellularMap::from_letters(c.word));
    });
}

void suite_euler(const VerifyOptions& opts, Collector& col) {
  for_edge_range(opts, 9, [&](const UnicellularMap& m) {
    ++col.checks;
    const int e = m.edge_count();
    const int v_indep = vertex_count_by_corner_gluing(m);
    if (v_indep != m.vertex_count())
      col.fail(m.to_string(), "vertex count: corner gluing " + std::to_string(v_indep) +
                                  " vs rotation orbits " + std::to_string(m.vertex_count()));
    const int sum = std::accumulate(m.degrees().begin(), m.degrees().end(), 0);
    if (sum != 2 * e)
      col.fail(m.to_string(), "degree sum " + std::to_string(sum) + " != 2E");
    if (e - v_indep + 1 != 2 * m.genus() || m.genus() < 0)
      col.fail(m.to_string(), "E - V = " + std::to_string(e - v_indep) +
                                  " does not equal 2g - 1 for g = " + std::to_string(m.genus()));
  });
}

void suite_card_shuffle(const VerifyOptions& opts, Collector& col) {
  for_corpus(default_corpora(opts, false), opts.threads, [&](const UnicellularMap& m) {
    for (const SurgeryMove& mv : all_moves(m)) {
      ++col.checks;
      UnicellularMap r = surgery(m, mv);
      if (r.word() != sector_swap_reference(m, mv))
        col.fail(m.to_string(), "rewrite mismatch for move (" + std::to_string(mv.a) + "," +
                                    std::to_string(mv.b) + ")");
      if (r.degrees() != m.degrees())
        col.fail(m.to_string(), "degree partition changed to " +
                                    r.degree_partition().to_string() + " by move (" +
                                    std::to_string(mv.a) + "," + std::to_string(mv.b) + ")");
      if (r.genus() != m.genus())
        col.fail(m.to_string(), "genus changed by move (" + std::to_string(mv.a) + "," +
                                    std::to_string(mv.b) + ")");
      if (vertex_count_by_corner_gluing(r) != r.vertex_count())
        col.fail(r.to_string(), "rewrite output fails corner-gluing cross-check");
      if (!is_intertwined(r, mv.a, mv.b))
        col.fail(m.to_string(), "images of the move pair are not intertwined after surgery");
      if (is_intertwined(m, mv.a, mv.b) != is_intertwined(m, bar(mv.a), bar(mv.b)))
        col.fail(m.to_string(), "intertwining is not bar-invariant for (" +
                                    std::to_string(mv.a) + "," + std::to_string(mv.b) + ")");
    }
  });
}

void suite_involution(const VerifyOptions& opts, Collector& col) {
  for_corpus(default_corpora(opts, false), opts.threads, [&](const UnicellularMap& m) {
    const CanonicalClass self = canonical_form(m);
    for (const SurgeryMove& mv : all_moves(m)) {
      ++col.checks;
      UnicellularMap back = involution_loop(m, mv);
      if (canonical_form(back).word != self.word)
        col.fail(m.to_string(), "double surgery left the class via move (" +
                                    std::to_string(mv.a) + "," + std::to_string(mv.b) + ")");
    }
  });
}

void suite_rank_genus(const VerifyOptions& opts, Collector& col) {
  for_edge_range(opts, 9, [&](const UnicellularMap& m) {
    ++col.checks;
    const int rank = gf2_rank(interlacement(m).rows, m.edge_count());
    if (rank % 2 != 0) col.fail(m.to_string(), "odd interlacement rank " + std::to_string(rank));
    if (rank / 2 != m.genus())
      col.fail(m.to_string(), "rank/2 = " + std::to_string(rank / 2) +
                                  " but genus = " + std::to_string(m.genus()));
    if (m.vertex_count() != m.edge_count() - rank + 1)
      col.fail(m.to_string(), "V != E - rank + 1");
  });
}

void suite_petersen(const VerifyOptions& opts, Collector& col) {
  for_corpus(default_corpora(opts, true), opts.threads, [&](const UnicellularMap& m) {
    if (!bridges(m).empty()) return;
    ++col.checks;
    MatchingResult res = perfect_matching(m);
    if (!res.matching) {
      col.fail(m.to_string(), "bridgeless cubic map without a perfect matching");
      return;
    }
    const UnderlyingGraph g = underlying_graph(m);
    std::vector<int> cover(g.vertex_count, 0);
    for (int id : *res.matching) {
      const auto& e = g.edges[id - 1];
      if (e.u == e.v) col.fail(m.to_string(), "matching uses a loop");
      ++cover[e.u];
      ++cover[e.v];
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (cover[v] != 1)
        col.fail(m.to_string(), "vertex " + std::to_string(v) + " covered " +
                                    std::to_string(cover[v]) + " times");
  });
}

void suite_bridge_elim(const VerifyOptions& opts, Collector& col) {
  std::vector<DegreePartition> corpora =
      opts.degrees ? std::vector<DegreePartition>{*opts.degrees}
                   : std::vector<DegreePartition>{DegreePartition({3, 3, 3, 3, 3, 3})};
  for_corpus(corpora, opts.threads, [&](const UnicellularMap& m) {
    const size_t nbridges = bridges(m).size();
    if (nbridges == 0) return;
    ++col.checks;
    try {
      BridgeEliminationTrace trace = bridge_elimination(m);
      for (const std::string& note : trace.monotonicity_notes) col.note(note);
      if (!trace.completed) {
        col.fail(m.to_string(), "not bridgeless after " + std::to_string(nbridges) + " steps");
        return;
      }
      if (trace.steps.size() > nbridges)
        col.fail(m.to_string(), "used more steps than the initial bridge count");
      const UnicellularMap& last = trace.steps.empty() ? m : trace.steps.back().result;
      if (!is_virtual_collection(last))
        col.fail(m.to_string(), "final map has no perfect matching");
    } catch (const MapError& err) {
      col.fail(m.to_string(), err.what());
    }
  });
}

void suite_even_invariant(const VerifyOptions& opts, Collector& col) {
  for_edge_range(opts, 8, [&](const UnicellularMap& m) {
    if (!is_even_partition(m)) return;
    ++col.checks;
    const InterlacementMatrix a = interlacement(m);
    for (int e = 0; e < a.n; ++e)
      if (a.rows[e] == 0)
        col.fail(m.to_string(), "edge " + std::to_string(e + 1) + " interlaces nothing");
    try {
      ParityCertificate cert = parity_certificate(m);
      if (static_cast<int>(cert.basis_edges.size()) != 2 * m.genus())
        col.fail(m.to_string(), "basis size != 2g");
      for (int e = 0; e < a.n; ++e)
        if (__builtin_parityll(a.rows[e] & cert.u) != 1) {
          col.fail(m.to_string(), "A u != 1");
          break;
        }
    } catch (const MapError& err) {
      col.fail(m.to_string(), err.what());
    }
  });
}

// ---- naive references for the oracle suite ----

std::vector<Letter> word_of_pairing(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size());
  std::vector<Letter> w(n);
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (partner[i] > i)
      w[i] = next++;
    else
      w[i] = -w[partner[i]];
  }
  return w;
}

void all_pairings(int n, std::vector<int>& partner, const std::function<void()>& leaf) {
  int i = 0;
  while (i < n && partner[i] != -1) ++i;
  if (i == n) {
    leaf();
    return;
  }
  for (int j = i + 1; j < n; ++j) {
    if (partner[j] != -1) continue;
    partner[i] = j;
    partner[j] = i;
    all_pairings(n, partner, leaf);
    partner[i] = -1;
    partner[j] = -1;
  }
}

std::vector<Letter> naive_canonical(const std::vector<Letter>& w) {
  std::vector<Letter> best = relabeled_rotation(w, 0);
  for (int s = 1; s < static_cast<int>(w.size()); ++s) {
    std::vector<Letter> cand = relabeled_rotation(w, s);
    if (word_less(cand, best)) best = cand;
  }
  return best;
}

std::vector<int> pairing_pattern(const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> first(n / 2 + 1, -1), partner(n);
  for (int i = 0; i < n; ++i) {
    int e = edge_of(w[i]);
    if (first[e] < 0)
      first[e] = i;
    else {
      partner[i] = first[e];
      partner[first[e]] = i;
    }
  }
  return partner;
}

bool naive_isomorphic(const std::vector<Letter>& u, const std::vector<Letter>& v) {
  if (u.size() != v.size()) return false;
  const int n = static_cast<int>(u.size());
  const std::vector<int> pv = pairing_pattern(v);
  for (int s = 0; s < n; ++s) {
    std::vector<Letter> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = u[(s + i) % n];
    if (pairing_pattern(rot) == pv) return true;
  }
  return false;
}

void suite_oracle_small(const VerifyOptions& opts, Collector& col) {
  const int cap = opts.edge_cap > 0 ? opts.edge_cap : 5;
  for (int e = 1; e <= cap; ++e) {
    // reference classes per degree partition, from plain pairing enumeration
    std::map<std::vector<int>, std::set<std::vector<Letter>>> by_partition;
    std::vector<int> partner(2 * e, -1);
    all_pairings(2 * e, partner, [&]() {
      std::vector<Letter> w = word_of_pairing(partner);
      UnicellularMap m = UnicellularMap::from_letters(w);
      by_partition[m.degrees()].insert(naive_canonical(w));
    });

    for (const DegreePartition& d : realizable_partitions(e)) {
      std::vector<std::vector<Letter>> got;
      enumerate_maps(d, [&](const CanonicalClass& c) { got.push_back(c.word); });
      ++col.checks;
      auto it = by_partition.find(d.degrees());
      const std::set<std::vector<Letter>> expect =
          it == by_partition.end() ? std::set<std::vector<Letter>>{} : it->second;
      if (std::set<std::vector<Letter>>(got.begin(), got.end()) != expect) {
        col.fail(d.to_string(), "enumeration disagrees with pairing oracle at E = " +
                                    std::to_string(e));
        continue;
      }
      if (!std::is_sorted(got.begin(), got.end(), word_less))
        col.fail(d.to_string(), "enumeration stream is not in canonical order");
    }

    // isomorphism against the rotation-matching oracle, on mangled variants
    std::vector<std::vector<Letter>> classes;
    for (const auto& [deg, words] : by_partition)
      classes.insert(classes.end(), words.begin(), words.end());
    auto mangle = [](const std::vector<Letter>& w, int rot) {
      std::vector<Letter> out(w.size());
      for (size_t i = 0; i < w.size(); ++i) {
        Letter x = w[(rot + i) % w.size()];
        out[i] = edge_of(x) % 2 == 1 ? -x : x;  // flip odd ids
      }
      return out;
    };
    for (const auto& a : classes)
      for (const auto& b : classes) {
        std::vector<Letter> vb = mangle(b, 1 % static_cast<int>(b.size()));
        ++col.checks;
        const bool lib = is_isomorphic(UnicellularMap::from_letters(a),
                                       UnicellularMap::parse(format_word(vb)));
        const bool ref = naive_isomorphic(a, vb);
        if (lib != ref)
          col.fail(format_word(a), "is_isomorphic disagrees with oracle vs " + format_word(vb));
      }

    // neighbors against the definition-driven scan
    for (const auto& a : classes) {
      UnicellularMap m = UnicellularMap::from_letters(a);
      std::set<std::vector<Letter>> expect;
      const std::vector<Letter> self = naive_canonical(m.word());
      for (int i = 1; i <= m.edge_count(); ++i)
        for (int j = 1; j <= m.edge_count(); ++j) {
          if (i == j) continue;
          for (Letter x : {Letter(i), Letter(-i)})
            for (Letter y : {Letter(j), Letter(-j)}) {
              if (!is_intertwined(m, x, y)) continue;
              std::vector<Letter> r = naive_canonical(surgery(m, x, y).word());
              if (r != self) expect.insert(r);
            }
        }
      ++col.checks;
      NeighborSet got = neighbors(m);
      std::set<std::vector<Letter>> got_set;
      for (const auto& [cls, mv] : got.classes) got_set.insert(cls.word);
      if (got_set != expect)
        col.fail(format_word(a), "neighbor set disagrees with intertwining oracle");
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "euler",   "card-shuffle", "involution",     "rank-genus",
      "petersen", "bridge-elim",  "even-invariant", "oracle-small"};
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
  VerificationReport r;
  r.suite = name;
  Collector col;
  const auto t0 = Clock::now();
  if (name == "euler")
    suite_euler(opts, col);
  else if (name == "card-shuffle")
    suite_card_shuffle(opts, col);
  else if (name == "involution")
    suite_involution(opts, col);
  else if (name == "rank-genus")
    suite_rank_genus(opts, col);
  else if (name == "petersen")
    suite_petersen(opts, col);
  else if (name == "bridge-elim")
    suite_bridge_elim(opts, col);
  else if (name == "even-invariant")
    suite_even_invariant(opts, col);
  else if (name == "oracle-small")
    suite_oracle_small(opts, col);
  else
    raise(Err::UnknownSuite, "no suite named '" + name + "'");
  col.finish(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"word", f.word}, {"detail", f.detail}});
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["seconds"] = r.seconds;
  return j.dump();
}

}  // namespace unimap
