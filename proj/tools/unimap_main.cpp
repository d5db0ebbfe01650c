#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unimap/canon.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/homology.hpp"
#include "unimap/map.hpp"
#include "unimap/structure.hpp"
#include "unimap/surgery.hpp"
#include "unimap/surgery_graph.hpp"
#include "unimap/umf.hpp"
#include "unimap/verify.hpp"

using json = nlohmann::json;
using namespace unimap;

namespace {

int default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<UnicellularMap> gather_inputs(const std::string& word, const std::string& file) {
  if (!word.empty() && !file.empty())
    raise(Err::MalformedToken, "give either a word or --in, not both");
  if (!word.empty()) return {UnicellularMap::parse(word)};
  if (!file.empty()) {
    if (file == "-") return read_corpus(std::cin);
    return read_corpus_file(file);
  }
  raise(Err::MalformedToken, "no input word");
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json)
    out << j.dump() << '\n';
  else
    out << text;
}

std::string move_str(const SurgeryMove& mv) {
  return "(" + std::to_string(mv.a) + "," + std::to_string(mv.b) + ")";
}

EnumerationCursor read_cursor(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::MalformedToken, "cannot open cursor " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("prefix") || !j.contains("stack"))
    raise(Err::MalformedToken, "cursor file must hold {prefix, stack}");
  EnumerationCursor cur;
  for (const auto& v : j["prefix"]) cur.prefix.push_back(v.get<Letter>());
  for (const auto& v : j["stack"]) cur.stack.push_back(v.get<int>());
  return cur;
}

void write_cursor(const std::string& path, const EnumerationCursor& cur) {
  json j;
  j["prefix"] = cur.prefix;
  j["stack"] = cur.stack;
  std::ofstream out(path);
  out << j.dump() << '\n';
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) raise(Err::MalformedToken, "cannot open output " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unicellular map toolkit: boundary words, surgeries, surgery graphs"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string word, in_file, out_file;
  std::string degrees_csv;
  int threads = default_threads();
  bool count_only = false;

  auto add_word_inputs = [&](CLI::App* cmd) {
    cmd->add_option("word", word, "boundary word, e.g. \"1 2 -1 -2\"");
    cmd->add_option("--in", in_file, "UMF file ('-' for stdin), one word per line");
  };

  auto* info = app.add_subcommand("info", "edges, vertices, genus, degrees of a map");
  add_word_inputs(info);

  auto* canon_cmd = app.add_subcommand("canon", "canonical word and symmetry count");
  add_word_inputs(canon_cmd);

  auto* nbrs = app.add_subcommand("neighbors", "surgery neighbors of a map class");
  add_word_inputs(nbrs);
  nbrs->add_flag("--count-only", count_only, "print only the neighbor count");

  auto* enum_cmd = app.add_subcommand("enumerate", "all classes with a degree partition");
  enum_cmd->add_option("--degrees", degrees_csv, "comma-separated degrees, e.g. 3,3,3,3,3,3")
      ->required();
  enum_cmd->add_flag("--count-only", count_only);
  enum_cmd->add_option("--out", out_file, "write words to a file instead of stdout");
  std::string resume_file, cursor_out;
  long long max_classes = 0;
  double max_seconds = 0;
  enum_cmd->add_option("--resume", resume_file, "cursor file from an interrupted run");
  enum_cmd->add_option("--cursor-out", cursor_out, "where to write the cursor when capped");
  enum_cmd->add_option("--max-classes", max_classes);
  enum_cmd->add_option("--max-seconds", max_seconds);
  enum_cmd->add_option("--threads", threads);

  auto* graph_cmd = app.add_subcommand("graph", "build the surgery graph of a partition");
  graph_cmd->add_option("--degrees", degrees_csv)->required();
  std::string export_fmt;
  graph_cmd->add_option("--export", export_fmt, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--out", out_file);
  graph_cmd->add_option("--threads", threads);
  long long max_nodes = 1000000;
  graph_cmd->add_option("--max-nodes", max_nodes);

  auto* comp_cmd = app.add_subcommand("components", "connected components of a surgery graph");
  comp_cmd->add_option("--degrees", degrees_csv)->required();
  comp_cmd->add_option("--threads", threads);
  comp_cmd->add_option("--max-nodes", max_nodes);

  auto* diam_cmd = app.add_subcommand("diameter", "diameter of a surgery graph");
  diam_cmd->add_option("--degrees", degrees_csv)->required();
  diam_cmd->add_option("--threads", threads);
  diam_cmd->add_option("--max-nodes", max_nodes);

  auto* bridges_cmd = app.add_subcommand("bridges", "bridges of the underlying graph");
  add_word_inputs(bridges_cmd);

  auto* match_cmd = app.add_subcommand("matching", "perfect matching of the underlying graph");
  add_word_inputs(match_cmd);

  auto* elim_cmd = app.add_subcommand("eliminate-bridges",
                                      "surgery sequence to a bridgeless cubic map");
  add_word_inputs(elim_cmd);

  auto* inv_cmd = app.add_subcommand("invariant", "interlacement rank and parity certificate");
  add_word_inputs(inv_cmd);

  auto* export_cmd = app.add_subcommand("export", "export a surgery graph as DOT or JSON");
  export_cmd->add_option("--degrees", degrees_csv, "build the full graph of a partition");
  std::string seeds_file;
  export_cmd->add_option("--seeds", seeds_file, "UMF file: closure of these maps instead");
  export_cmd->add_option("--format", export_fmt)->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", out_file);
  export_cmd->add_option("--threads", threads);
  export_cmd->add_option("--max-nodes", max_nodes);

  auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "one of: euler card-shuffle involution rank-genus petersen bridge-elim even-invariant oracle-small")
      ->required();
  verify_cmd->add_option("--degrees", degrees_csv, "restrict the suite to one partition");
  int edge_cap = 0;
  verify_cmd->add_option("--edge-cap", edge_cap, "override the suite's edge bound");
  verify_cmd->add_option("--threads", threads);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) {
      for (const auto& m : gather_inputs(word, in_file)) {
        json j{{"word", m.to_string()},
               {"edges", m.edge_count()},
               {"vertices", m.vertex_count()},
               {"genus", m.genus()},
               {"degrees", m.degrees()}};
        std::string text = "word: " + m.to_string() + "\nedges: " +
                           std::to_string(m.edge_count()) + "\nvertices: " +
                           std::to_string(m.vertex_count()) + "\ngenus: " +
                           std::to_string(m.genus()) + "\ndegrees:";
        for (int d : m.degrees()) text += " " + std::to_string(d);
        emit(std::cout, as_json, j, text + "\n");
      }
    } else if (*canon_cmd) {
      for (const auto& m : gather_inputs(word, in_file)) {
        CanonicalClass c = canonical_form(m);
        emit(std::cout, as_json,
             json{{"canonical_word", format_word(c.word)}, {"symmetry", c.symmetry}},
             format_word(c.word) + "  symmetry=" + std::to_string(c.symmetry) + "\n");
      }
    } else if (*nbrs) {
      for (const auto& m : gather_inputs(word, in_file)) {
        NeighborSet ns = neighbors(m);
        if (as_json) {
          json lst = json::array();
          for (const auto& [cls, mv] : ns.classes)
            lst.push_back({{"word", format_word(cls.word)}, {"move", {mv.a, mv.b}}});
          std::cout << json{{"word", m.to_string()},
                            {"count", ns.classes.size()},
                            {"self_moves", ns.self_moves},
                            {"neighbors", count_only ? json::array() : lst}}
                           .dump()
                    << '\n';
        } else if (count_only) {
          std::cout << ns.classes.size() << '\n';
        } else {
          std::cout << "# " << ns.classes.size() << " neighbors, " << ns.self_moves
                    << " self moves\n";
          for (const auto& [cls, mv] : ns.classes)
            std::cout << format_word(cls.word) << "  via " << move_str(mv) << '\n';
        }
      }
    } else if (*enum_cmd) {
      EnumerateOptions opts;
      opts.threads = threads;
      if (max_classes > 0) opts.max_classes = max_classes;
      if (max_seconds > 0) opts.max_seconds = max_seconds;
      EnumerationCursor cur;
      if (!resume_file.empty()) {
        cur = read_cursor(resume_file);
        opts.resume = &cur;
      }
      std::ofstream file;
      std::ostream& out = open_out(file, out_file);
      long long count = 0;
      EnumerationResult res = enumerate_maps(
          DegreePartition::parse(degrees_csv),
          [&](const CanonicalClass& c) {
            ++count;
            if (!count_only) out << format_word(c.word) << '\n';
          },
          opts);
      if (count_only) out << count << '\n';
      if (!res.complete) {
        if (!cursor_out.empty() && res.cursor) write_cursor(cursor_out, *res.cursor);
        std::cerr << "cap exceeded after " << res.emitted << " classes"
                  << (cursor_out.empty() ? "" : "; cursor written to " + cursor_out) << '\n';
        return 2;
      }
    } else if (*graph_cmd || *export_cmd) {
      BuildOptions opts{threads, max_nodes};
      SurgeryGraph g;
      if (*export_cmd && !seeds_file.empty()) {
        g = build_graph_from_seeds(read_corpus_file(seeds_file), opts);
      } else {
        if (degrees_csv.empty()) raise(Err::MalformedToken, "need --degrees or --seeds");
        g = build_graph(DegreePartition::parse(degrees_csv), opts);
      }
      if (!g.complete) {
        std::cerr << "cap exceeded: graph is partial\n";
        return 2;
      }
      std::ofstream file;
      std::ostream& out = open_out(file, out_file);
      if (*export_cmd || !export_fmt.empty()) {
        const std::string fmt = export_fmt.empty() ? "json" : export_fmt;
        out << (fmt == "dot" ? graph_to_dot(g) : graph_to_json(g) + "\n");
      } else {
        json j{{"nodes", g.node_count()},
               {"edges", g.edge_count()},
               {"isolated", isolated_nodes(g).size()}};
        emit(out, as_json, j,
             "nodes: " + std::to_string(g.node_count()) + "\nedges: " +
                 std::to_string(g.edge_count()) + "\nisolated: " +
                 std::to_string(isolated_nodes(g).size()) + "\n");
      }
    } else if (*comp_cmd) {
      SurgeryGraph g = build_graph(DegreePartition::parse(degrees_csv), {threads, max_nodes});
      if (!g.complete) {
        std::cerr << "cap exceeded: graph is partial\n";
        return 2;
      }
      auto comps = components(g);
      if (as_json) {
        json j{{"count", comps.size()}, {"components", comps}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << comps.size() << " components\n";
        for (const auto& c : comps) {
          std::cout << "size " << c.size() << ":";
          for (int v : c) std::cout << ' ' << v;
          std::cout << '\n';
        }
      }
    } else if (*diam_cmd) {
      SurgeryGraph g = build_graph(DegreePartition::parse(degrees_csv), {threads, max_nodes});
      if (!g.complete) {
        std::cerr << "cap exceeded: graph is partial\n";
        return 2;
      }
      DiameterResult d = diameter(g, threads);
      if (as_json) {
        json j{{"infinite", d.infinite}, {"exact", d.exact}};
        if (!d.infinite) j["diameter"] = d.value;
        std::cout << j.dump() << '\n';
      } else if (d.infinite) {
        std::cout << "infinite (disconnected)\n";
      } else {
        std::cout << d.value << (d.exact ? "" : " (lower bound)") << '\n';
      }
    } else if (*bridges_cmd) {
      for (const auto& m : gather_inputs(word, in_file)) {
        std::vector<int> b = bridges(m);
        if (as_json) {
          std::cout << json{{"word", m.to_string()}, {"bridges", b}}.dump() << '\n';
        } else {
          std::cout << "bridges:";
          for (int e : b) std::cout << ' ' << e;
          std::cout << '\n';
        }
      }
    } else if (*match_cmd) {
      for (const auto& m : gather_inputs(word, in_file)) {
        MatchingResult res = perfect_matching(m);
        if (as_json) {
          json j{{"word", m.to_string()}};
          if (res.matching)
            j["matching"] = *res.matching;
          else {
            j["matching"] = nullptr;
            j["reason"] = res.reason == MatchingResult::Absent::odd_vertex_count
                              ? "odd_vertex_count"
                              : "exhausted";
          }
          std::cout << j.dump() << '\n';
        } else if (res.matching) {
          std::cout << "matching:";
          for (int e : *res.matching) std::cout << ' ' << e;
          std::cout << '\n';
        } else {
          std::cout << "no perfect matching ("
                    << (res.reason == MatchingResult::Absent::odd_vertex_count
                            ? "odd vertex count"
                            : "search exhausted")
                    << ")\n";
        }
      }
    } else if (*elim_cmd) {
      for (const auto& m : gather_inputs(word, in_file)) {
        BridgeEliminationTrace trace = bridge_elimination(m);
        if (as_json) {
          json steps = json::array();
          for (const auto& s : trace.steps)
            steps.push_back({{"bridge", s.designated_bridge},
                             {"move", {s.move.a, s.move.b}},
                             {"word", s.result.to_string()},
                             {"bridges_after", s.bridges_after}});
          std::cout << json{{"word", m.to_string()},
                            {"steps", steps},
                            {"completed", trace.completed},
                            {"notes", trace.monotonicity_notes}}
                           .dump()
                    << '\n';
        } else {
          std::cout << m.to_string() << '\n';
          for (const auto& s : trace.steps)
            std::cout << s.result.to_string() << "  # bridge " << s.designated_bridge
                      << " via " << move_str(s.move) << '\n';
          for (const auto& note : trace.monotonicity_notes) std::cout << "# note: " << note << '\n';
        }
      }
    } else if (*inv_cmd) {
      for (const auto& m : gather_inputs(word, in_file)) {
        const bool even = is_even_partition(m);
        const int rank = gf2_rank(interlacement(m).rows, m.edge_count());
        json j{{"word", m.to_string()},
               {"even", even},
               {"rank", rank},
               {"genus", m.genus()},
               {"genus_from_rank", rank / 2}};
        std::string text = "even partition: " + std::string(even ? "yes" : "no") +
                           "\nrank: " + std::to_string(rank) + "\ngenus: " +
                           std::to_string(m.genus()) + " (from rank: " +
                           std::to_string(rank / 2) + ")\n";
        if (even) {
          try {
            ParityCertificate cert = parity_certificate(m);
            j["certificate"] = {{"basis_edges", cert.basis_edges}, {"u_edges", cert.u_edges()}};
            text += "certificate: basis";
            for (int e : cert.basis_edges) text += " " + std::to_string(e);
            text += ", u";
            for (int e : cert.u_edges()) text += " " + std::to_string(e);
            text += "\n";
          } catch (const MapError& err) {
            j["certificate_error"] = err.what();
            text += std::string("certificate failed: ") + err.what() + "\n";
          }
        }
        emit(std::cout, as_json, j, text);
      }
    } else if (*verify_cmd) {
      VerifyOptions opts;
      opts.threads = threads;
      opts.edge_cap = edge_cap;
      if (!degrees_csv.empty()) opts.degrees = DegreePartition::parse(degrees_csv);
      VerificationReport r = run_suite(suite, opts);
      if (as_json) {
        std::cout << report_to_json(r) << '\n';
      } else {
        std::cout << r.suite << ": " << r.checks << " checks, " << r.failures.size()
                  << " failures\n";
        for (const auto& f : r.failures)
          std::cout << "FAIL " << f.word << ": " << f.detail << '\n';
        for (const auto& note : r.notes) std::cout << "note: " << note << '\n';
      }
      if (!r.passed()) return 3;
    }
  } catch (const MapError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return err.code() == Err::CapExceeded ? 2 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
