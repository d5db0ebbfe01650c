#include "unimap/surgery_graph.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "workers.hpp"

#include <nlohmann/json.hpp>

namespace unimap {

long long SurgeryGraph::edge_count() const {
  long long twice = 0;
  for (const auto& a : adj) twice += static_cast<long long>(a.size());
  return twice / 2;
}

int SurgeryGraph::index_of(const std::vector<Letter>& word) const {
  auto it = std::lower_bound(words.begin(), words.end(), word,
                             [](const auto& a, const auto& b) { return word_less(a, b); });
  if (it == words.end() || *it != word) return -1;
  return static_cast<int>(it - words.begin());
}

namespace {

void fill_edges(SurgeryGraph& g, int threads) {
  const int n = g.node_count();
  g.adj.assign(n, {});
  g.self_moves.assign(n, 0);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) break;
      UnicellularMap m = UnicellularMap::from_letters(g.words[i]);
      NeighborSet ns = neighbors(m);
      g.self_moves[i] = ns.self_moves;
      std::vector<int>& out = g.adj[i];
      out.reserve(ns.classes.size());
      for (const auto& [cls, mv] : ns.classes) {
        const int j = g.index_of(cls.word);
        if (j < 0)
          raise(Err::PropertyFailure,
                "surgery left the enumerated node set: " + format_word(cls.word));
        out.push_back(j);
      }
    }
  };
  detail::run_workers(threads, work);
  // surgery is reversible, so per-node scans must agree pairwise
  std::vector<std::pair<int, int>> missing;
  for (int i = 0; i < n; ++i)
    for (int j : g.adj[i])
      if (!std::binary_search(g.adj[j].begin(), g.adj[j].end(), i)) missing.emplace_back(j, i);
  if (!missing.empty())
    raise(Err::PropertyFailure, "surgery adjacency is not symmetric");
}

}  // namespace

SurgeryGraph build_graph(const DegreePartition& degrees, const BuildOptions& opts) {
  SurgeryGraph g;
  EnumerateOptions eopts;
  eopts.threads = opts.threads;
  eopts.max_classes = opts.max_nodes;
  EnumerationResult res = enumerate_maps(
      degrees,
      [&g](const CanonicalClass& c) {
        g.words.push_back(c.word);
        g.symmetry.push_back(c.symmetry);
      },
      eopts);
  if (!res.complete) {
    g.complete = false;
    return g;  // partial: adjacency left empty, queries will refuse it
  }
  fill_edges(g, opts.threads);
  return g;
}

SurgeryGraph build_graph_from_seeds(const std::vector<UnicellularMap>& seeds,
                                    const BuildOptions& opts) {
  std::map<std::vector<Letter>, int> symmetry_of;
  std::vector<std::vector<Letter>> frontier;
  for (const auto& m : seeds) {
    CanonicalClass c = canonical_form(m);
    if (symmetry_of.emplace(c.word, c.symmetry).second) frontier.push_back(c.word);
  }
  bool complete = true;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), word_less);
    std::vector<std::vector<Letter>> next_frontier;
    for (const auto& w : frontier) {
      NeighborSet ns = neighbors(UnicellularMap::from_letters(w));
      for (const auto& [cls, mv] : ns.classes)
        if (symmetry_of.emplace(cls.word, cls.symmetry).second)
          next_frontier.push_back(cls.word);
    }
    if (static_cast<long long>(symmetry_of.size()) > opts.max_nodes) {
      complete = false;
      break;
    }
    frontier = std::move(next_frontier);
  }

  SurgeryGraph g;
  g.provenance = SurgeryGraph::Provenance::seed_closure;
  g.complete = complete;
  for (const auto& [w, sym] : symmetry_of) g.words.push_back(w);
  std::sort(g.words.begin(), g.words.end(), word_less);
  g.symmetry.reserve(g.words.size());
  for (const auto& w : g.words) g.symmetry.push_back(symmetry_of[w]);
  if (complete) fill_edges(g, opts.threads);
  return g;
}

std::vector<std::vector<int>> components(const SurgeryGraph& g) {
  if (!g.complete)
    raise(Err::PartialGraph, "graph construction was capped; connectivity is undecidable");
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.adj[v])
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

DiameterResult diameter(const SurgeryGraph& g, int threads) {
  if (!g.complete)
    raise(Err::PartialGraph, "graph construction was capped; diameter is undecidable");
  DiameterResult res;
  const int n = g.node_count();
  if (n == 0) return res;

  constexpr int kExactLimit = 100000;
  const int sources = n <= kExactLimit ? n : 256;
  res.exact = n <= kExactLimit;

  std::atomic<long long> best{0};
  std::atomic<bool> infinite{false};
  std::atomic<int> next{0};
  auto work = [&]() {
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= sources || infinite.load()) break;
      std::fill(dist.begin(), dist.end(), -1);
      int head = 0, tail = 0;
      queue[tail++] = s;
      dist[s] = 0;
      int ecc = 0, seen = 1;
      while (head < tail) {
        const int v = queue[head++];
        ecc = dist[v];
        for (int w : g.adj[v])
          if (dist[w] == -1) {
            dist[w] = dist[v] + 1;
            queue[tail++] = w;
            ++seen;
          }
      }
      if (seen < n) {
        infinite.store(true);
        break;
      }
      long long cur = best.load();
      while (ecc > cur && !best.compare_exchange_weak(cur, ecc)) {
      }
    }
  };
  detail::run_workers(threads, work);
  res.infinite = infinite.load();
  res.value = res.infinite ? 0 : best.load();
  return res;
}

std::vector<int> isolated_nodes(const SurgeryGraph& g) {
  if (!g.complete)
    raise(Err::PartialGraph, "graph construction was capped; node degrees are undecidable");
  std::vector<int> out;
  for (int i = 0; i < g.node_count(); ++i)
    if (g.adj[i].empty()) out.push_back(i);
  return out;
}

std::string graph_to_json(const SurgeryGraph& g) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (int i = 0; i < g.node_count(); ++i) {
    UnicellularMap m = UnicellularMap::from_letters(g.words[i]);
    nlohmann::json node;
    node["id"] = i;
    node["word"] = format_word(g.words[i]);
    node["degrees"] = m.degrees();
    node["genus"] = m.genus();
    j["nodes"].push_back(std::move(node));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.node_count(); ++i)
    for (int k : g.adj[i])
      if (i < k) edges.emplace_back(i, k);
  std::sort(edges.begin(), edges.end());
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
  return j.dump();
}

std::string graph_to_dot(const SurgeryGraph& g) {
  std::string out = "graph surgery {\n";
  for (int i = 0; i < g.node_count(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + format_word(g.words[i]) + "\"];\n";
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.node_count(); ++i)
    for (int k : g.adj[i])
      if (i < k) edges.emplace_back(i, k);
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges)
    out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace unimap
