// srgpaths: generators, induced-path search and witness extraction for
// strongly regular graphs, plus survey and verification reports.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "srgpaths/claims.hpp"
#include "srgpaths/families.hpp"
#include "srgpaths/formats.hpp"
#include "srgpaths/patterns.hpp"
#include "srgpaths/srg.hpp"
#include "srgpaths/witnesses.hpp"

namespace {

using namespace srgpaths;

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << payload;
}

std::string first_graph6_line(std::string text) {
  const std::string header = ">>graph6<<";
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (!line.empty()) return line;
  }
  throw Error("no graph6 line in input");
}

Graph load_graph(const std::string& path) {
  return parse_graph6(first_graph6_line(read_input(path)));
}

int thread_cap(int requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("SRG_PATHS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> labels_of(const Graph& g, const VertexList& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.label(v));
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (...) {
  }
  throw Error(what + ": '" + tok + "' is not an integer");
}

// ---------------------------------------------------------------------------
// Shared family resolution (gen, witness sources, survey manifests).

struct StsSource {
  int bose = 0;
  int skolem = 0;
  int sts13_index = 0;
  std::string file;

  SteinerTripleSystem resolve() const {
    const int picks = (bose > 0) + (skolem > 0) + (sts13_index > 0) + !file.empty();
    if (picks != 1) throw Error("pick exactly one of --bose, --skolem, --sts13, or a file");
    if (bose > 0) return bose_sts(bose);
    if (skolem > 0) return skolem_sts(skolem);
    if (sts13_index > 0) return sts13(sts13_index);
    return parse_sts(read_input(file));
  }
};

// "johnson2 6", "petersen", "multipartite 3 2", "latin 6", "mols 9",
// "sts-bose 9", "sts-skolem 13", "sts13 1", "g6 <line>", "file <path>"
Graph family_graph(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error("empty family spec");
  const std::string& kind = tokens[0];
  auto arg = [&](std::size_t i) -> int {
    if (i >= tokens.size()) throw Error(kind + ": missing argument");
    return parse_int(tokens[i], kind);
  };
  if (kind == "johnson2") return johnson2(arg(1));
  if (kind == "kneser2") return kneser2(arg(1));
  if (kind == "hamming2") return hamming2(arg(1));
  if (kind == "petersen") return petersen();
  if (kind == "c5") return cycle_graph(5);
  if (kind == "multipartite") return complete_multipartite(arg(1), arg(2));
  if (kind == "latin") return latin_square_graph(cyclic_latin(arg(1)));
  if (kind == "mols") return mols_graph(orthogonal_pair(arg(1)));
  if (kind == "sts-bose") return sts_block_graph(bose_sts(arg(1)));
  if (kind == "sts-skolem") return sts_block_graph(skolem_sts(arg(1)));
  if (kind == "sts13") return sts_block_graph(sts13(arg(1)));
  if (kind == "g6") {
    if (tokens.size() < 2) throw Error("g6: missing payload");
    return parse_graph6(tokens[1]);
  }
  if (kind == "file") {
    if (tokens.size() < 2) throw Error("file: missing path");
    return load_graph(tokens[1]);
  }
  throw Error("unknown family '" + kind + "'");
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::vector<std::string> args;
  StsSource sts;
  std::string square_file;
  std::string out;
};

int run_gen(const GenArgs& a) {
  auto emit_graph = [&](const Graph& g, std::optional<SrgParams> expected) {
    write_output(a.out, write_graph6(g) + "\n");
    const auto measured = srg_params(g);
    std::ostream& os = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    if (expected) os << "expected-params: " << to_string(*expected) << "\n";
    os << "measured-params: " << (measured ? to_string(*measured) : "not strongly regular")
       << "\n";
    return kExitFound;
  };
  auto arg = [&](std::size_t i) -> int {
    if (i >= a.args.size()) throw Error(a.family + ": missing argument");
    return parse_int(a.args[i], a.family);
  };

  if (a.family == "johnson2")
    return emit_graph(johnson2(arg(0)), expected_params(FamilyKind::Johnson2, arg(0)));
  if (a.family == "kneser2")
    return emit_graph(kneser2(arg(0)), expected_params(FamilyKind::Kneser2, arg(0)));
  if (a.family == "hamming2")
    return emit_graph(hamming2(arg(0)), expected_params(FamilyKind::Hamming2, arg(0)));
  if (a.family == "petersen")
    return emit_graph(petersen(), expected_params(FamilyKind::Petersen, 0));
  if (a.family == "multipartite")
    return emit_graph(complete_multipartite(arg(0), arg(1)),
                      expected_params(FamilyKind::CompleteMultipartite, arg(0), arg(1)));
  if (a.family == "latin-graph") {
    const LatinSquare sq =
        a.square_file.empty() ? cyclic_latin(arg(0)) : parse_latin(read_input(a.square_file));
    std::optional<SrgParams> expected;
    if (sq.order() >= 3) expected = expected_params(FamilyKind::LatinSquare, sq.order());
    return emit_graph(latin_square_graph(sq), expected);
  }
  if (a.family == "mols-graph")
    return emit_graph(mols_graph(orthogonal_pair(arg(0))),
                      expected_params(FamilyKind::Mols, arg(0)));
  if (a.family == "sts-block") {
    const SteinerTripleSystem s = a.sts.resolve();
    return emit_graph(sts_block_graph(s), expected_params(FamilyKind::StsBlock, s.points()));
  }
  if (a.family == "latin") {
    write_output(a.out, write_latin(cyclic_latin(arg(0))));
    return kExitFound;
  }
  if (a.family == "sts") {
    write_output(a.out, write_sts(a.sts.resolve()));
    return kExitFound;
  }
  throw Error("unknown family '" + a.family +
              "' (families: johnson2 kneser2 hamming2 petersen multipartite latin-graph "
              "mols-graph sts-block latin sts)");
}

// ---------------------------------------------------------------------------
// find

struct FindArgs {
  std::string input;
  std::string pattern = "P4";
  std::string mode = "oracle";
  double budget_seconds = 0;
};

int run_find(const FindArgs& a) {
  const auto kind = pattern_from_name(a.pattern);
  if (!kind) throw Error("unknown pattern '" + a.pattern + "'");
  const Graph g = load_graph(a.input);
  std::cout << "pattern: " << pattern_name(*kind) << "\n";

  std::optional<SearchOutcome> oracle;
  if (a.mode == "oracle" || a.mode == "both") {
    if (a.budget_seconds > 0) {
      oracle = find_induced_within(
          g, *kind,
          std::chrono::duration_cast<std::chrono::nanoseconds>(
              std::chrono::duration<double>(a.budget_seconds)));
      if (!oracle) throw Error("search budget exceeded");
    } else {
      oracle = find_induced(g, *kind);
    }
    std::cout << "oracle: " << (oracle->found ? "found" : "not found") << "\n";
    if (oracle->found) {
      std::cout << "witness:";
      for (int v : oracle->witness) std::cout << " " << v;
      std::cout << "\n";
      if (g.has_labels()) std::cout << "labels: " << join(labels_of(g, oracle->witness), " ") << "\n";
    }
  }

  std::optional<bool> constructed;
  if (a.mode == "constructive" || a.mode == "both") {
    if (*kind != PatternKind::P4)
      throw Error("constructive mode applies to P4 on plain graph input; use the witness "
                  "command for family-specific P5/co-P5 constructions");
    try {
      const Witness w = p4_witness(g);
      constructed = true;
      std::cout << "constructive: branch " << w.branch << "\n";
      std::cout << "witness:";
      for (int v : w.vertices) std::cout << " " << v;
      std::cout << "\n";
    } catch (const ImprimitiveInput&) {
      constructed = false;  // imprimitive strongly regular graphs are P4-free
      std::cout << "constructive: not found (imprimitive)\n";
    }
  }

  if (a.mode == "both" && oracle && constructed && oracle->found != *constructed) {
    std::cerr << "error: oracle and construction disagree\n";
    return 3;
  }
  const bool found = oracle ? oracle->found : *constructed;
  return found ? kExitFound : kExitNegative;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessArgs {
  std::string op;
  std::vector<std::string> args;
  int cyclic = 0;
  std::string first_file, second_file;
  StsSource sts;
};

int run_witness(const WitnessArgs& a) {
  Graph graph;
  std::optional<Witness> w;

  auto latin_input = [&]() -> LatinSquare {
    if (a.cyclic > 0) return cyclic_latin(a.cyclic);
    if (a.args.empty()) throw Error(a.op + ": give a square file or --cyclic M");
    return parse_latin(read_input(a.args[0]));
  };
  auto mols_input = [&]() -> MolsPair {
    if (a.cyclic > 0) return orthogonal_pair(a.cyclic);
    if (a.first_file.empty() || a.second_file.empty())
      throw Error(a.op + ": give --first/--second square files or --cyclic M");
    return MolsPair(parse_latin(read_input(a.first_file)),
                    parse_latin(read_input(a.second_file)));
  };

  try {
    if (a.op == "p4") {
      if (a.args.empty()) throw Error("p4: give a graph6 file");
      graph = load_graph(a.args[0]);
      w = p4_witness(graph);
    } else if (a.op == "explicit") {
      if (a.args.size() < 3) throw Error("explicit: <johnson2|hamming2> <P5|COP5> <m>");
      const auto fam = family_from_name(a.args[0]);
      const auto pat = pattern_from_name(a.args[1]);
      if (!fam || !pat) throw Error("explicit: bad family or pattern");
      const int m = parse_int(a.args[2], "explicit");
      w = explicit_witness(*fam, *pat, m);
      graph = *fam == FamilyKind::Johnson2 ? johnson2(m) : hamming2(m);
    } else if (a.op == "latin-p5") {
      const LatinSquare sq = latin_input();
      graph = latin_square_graph(sq);
      w = latin_p5(sq);
    } else if (a.op == "latin-cop5") {
      const LatinSquare sq = latin_input();
      graph = latin_square_graph(sq);
      w = latin_cop5(sq);
    } else if (a.op == "mols-p5") {
      const MolsPair pair = mols_input();
      graph = mols_graph(pair);
      w = mols_p5(pair);
    } else if (a.op == "mols-cop5") {
      const MolsPair pair = mols_input();
      graph = mols_graph(pair);
      w = mols_cop5(pair);
    } else if (a.op == "sts-p5" || a.op == "sts-cop5") {
      StsSource src = a.sts;
      if (src.bose == 0 && src.skolem == 0 && src.sts13_index == 0 && src.file.empty() &&
          !a.args.empty())
        src.file = a.args[0];
      const SteinerTripleSystem s = src.resolve();
      graph = sts_block_graph(s);
      w = a.op == "sts-p5" ? sts_p5(s) : sts_cop5(s);
    } else {
      throw Error("unknown witness kind '" + a.op +
                  "' (kinds: p4 explicit latin-p5 latin-cop5 mols-p5 mols-cop5 sts-p5 sts-cop5)");
    }
  } catch (const BelowThreshold& e) {
    std::cout << "below-threshold: " << e.what() << "\n";
    return kExitNegative;
  } catch (const BadOrder& e) {
    std::cout << "bad-order: " << e.what() << "\n";
    return kExitNegative;
  } catch (const ImprimitiveInput& e) {
    std::cout << "imprimitive: " << e.what() << "\n";
    return kExitNegative;
  }

  std::cout << "pattern: " << pattern_name(w->pattern) << "\n";
  std::cout << "branch: " << w->branch << "\n";
  std::cout << "vertices:";
  for (int v : w->vertices) std::cout << " " << v;
  std::cout << "\n";
  if (graph.has_labels())
    std::cout << "labels: " << join(labels_of(graph, w->vertices), " | ") << "\n";
  return kExitFound;
}

// ---------------------------------------------------------------------------
// check

int run_check(const std::string& input) {
  const Graph g = load_graph(input);
  std::cout << "vertices: " << g.size() << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
  const auto params = srg_params(g);
  std::cout << "strongly-regular: " << (params ? to_string(*params) : "no") << "\n";
  if (params) {
    std::cout << "primitive: " << (is_primitive(g) ? "yes" : "no") << "\n";
    const auto shape = multipartite_decomposition(g);
    if (shape)
      std::cout << "complete-multipartite: " << shape->parts << " parts of size "
                << shape->part_size << "\n";
  }
  const auto cycle = girth(g);
  std::cout << "girth: " << (cycle ? std::to_string(*cycle) : "acyclic") << "\n";
  std::cout << "cograph: " << (is_cograph(g) ? "yes" : "no") << "\n";
  return params ? kExitFound : kExitNegative;
}

// ---------------------------------------------------------------------------
// survey

struct SurveyArgs {
  std::string manifest;
  bool builtin = false;
  double budget_seconds = 60.0;
  std::string format = "csv";
  std::string out;
  int threads = 0;
};

struct SurveyEntry {
  std::string name;
  std::vector<std::string> spec;  // family_graph tokens
};

std::vector<SurveyEntry> parse_manifest(const std::string& text) {
  std::vector<SurveyEntry> entries;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2) {
      entries.push_back({line, {}});  // malformed; reported per-entry
      continue;
    }
    // kinds: g6 <name> <line> | g6-file <name> <path> | latin-file <name> <path>
    //        | sts-file <name> <path> | family <name> <spec...>
    SurveyEntry entry;
    entry.name = tokens[1];
    if (tokens[0] == "family") {
      entry.spec.assign(tokens.begin() + 2, tokens.end());
    } else if (tokens[0] == "g6-file" && tokens.size() >= 3) {
      // A catalog file: one graph6 line per entry.
      try {
        const std::string header = ">>graph6<<";
        std::istringstream file(read_input(tokens[2]));
        std::string g6line;
        int count = 0;
        std::vector<SurveyEntry> expanded;
        while (std::getline(file, g6line)) {
          if (!g6line.empty() && g6line.back() == '\r') g6line.pop_back();
          if (g6line.rfind(header, 0) == 0) g6line = g6line.substr(header.size());
          if (g6line.empty()) continue;
          ++count;
          expanded.push_back({tokens[1] + "#" + std::to_string(count), {"g6", g6line}});
        }
        if (expanded.size() == 1) expanded[0].name = tokens[1];
        entries.insert(entries.end(), expanded.begin(), expanded.end());
      } catch (const std::exception&) {
        entries.push_back({tokens[1], {"g6-file-unreadable", tokens[2]}});
      }
      continue;
    } else {
      entry.spec = {tokens[0]};
      entry.spec.insert(entry.spec.end(), tokens.begin() + 2, tokens.end());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

Graph survey_graph(const std::vector<std::string>& spec) {
  if (spec.empty()) throw Error("malformed manifest line");
  if (spec[0] == "g6-file-unreadable") throw Error("cannot open " + spec[1]);
  if (spec[0] == "latin-file") {
    if (spec.size() < 2) throw Error("latin-file: missing path");
    return latin_square_graph(parse_latin(read_input(spec[1])));
  }
  if (spec[0] == "sts-file") {
    if (spec.size() < 2) throw Error("sts-file: missing path");
    return sts_block_graph(parse_sts(read_input(spec[1])));
  }
  return family_graph(spec);
}

int run_survey(const SurveyArgs& a) {
  std::vector<SurveyEntry> entries;
  if (!a.manifest.empty())
    entries = parse_manifest(read_input(a.manifest));
  if (a.builtin)
    for (const CatalogEntry& e : generated_catalog())
      entries.push_back({e.name, {"builtin", e.name}});
  if (entries.empty() && a.manifest.empty())
    throw Error("give a manifest path or --builtin");

  const auto catalog = a.builtin ? generated_catalog() : std::vector<CatalogEntry>{};
  std::vector<ReportRow> rows(entries.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> any_error{false};

  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= entries.size()) return;
      const SurveyEntry& entry = entries[i];
      ReportRow& row = rows[i];
      row.name = entry.name;
      const auto start = std::chrono::steady_clock::now();
      try {
        Graph g;
        if (!entry.spec.empty() && entry.spec[0] == "builtin") {
          for (const CatalogEntry& c : catalog)
            if (c.name == entry.spec[1]) g = c.graph;
        } else {
          g = survey_graph(entry.spec);
        }
        row.params = srg_params(g);
        if (row.params) row.primitive = is_primitive(g);
        const auto deadline =
            start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(a.budget_seconds));
        for (PatternKind kind :
             {PatternKind::P4, PatternKind::P5, PatternKind::CoP5, PatternKind::Gem}) {
          const auto remaining = deadline - std::chrono::steady_clock::now();
          std::optional<SearchOutcome> out;
          if (a.budget_seconds <= 0) {
            out = find_induced(g, kind);
          } else if (remaining > std::chrono::steady_clock::duration::zero()) {
            out = find_induced_within(
                g, kind, std::chrono::duration_cast<std::chrono::nanoseconds>(remaining));
          }
          if (!out) {
            row.note += std::string(row.note.empty() ? "" : "; ") + "skipped " +
                        std::string(pattern_name(kind)) + " (budget)";
            continue;
          }
          PatternFinding finding;
          finding.pattern = kind;
          finding.found = out->found;
          if (out->found) finding.witness_labels = labels_of(g, out->witness);
          row.findings.push_back(std::move(finding));
        }
      } catch (const std::exception& e) {
        row.note = std::string("error: ") + e.what();
        any_error = true;
      }
      row.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };

  const int nthreads = std::min<int>(thread_cap(a.threads),
                                     std::max<std::size_t>(entries.size(), 1));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  write_output(a.out, emit_report(rows, a.format == "jsonl" ? ReportFormat::JsonLines
                                                            : ReportFormat::Csv));

  // Evidence summary: which entries are co-P5-free, and are they triangle-free?
  int cop5_free = 0;
  for (const ReportRow& row : rows) {
    for (const PatternFinding& f : row.findings) {
      if (f.pattern != PatternKind::CoP5 || f.found) continue;
      ++cop5_free;
      const bool triangle_free = row.params && row.params->lambda == 0;
      std::cerr << "co-P5-free: " << row.name
                << (row.primitive.value_or(false) ? " (primitive" : " (not primitive")
                << (triangle_free ? ", triangle-free)" : ", has triangles)") << "\n";
    }
  }
  std::cerr << "co-P5-free entries: " << cop5_free << " of " << rows.size() << "\n";
  return any_error ? kExitError : kExitFound;
}

// ---------------------------------------------------------------------------
// verify-paper

struct VerifyArgs {
  ClaimOptions options;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const auto results = run_claim_suite(a.options);
  write_output(a.out, claim_report_csv(results));
  int failed = 0;
  for (const ClaimResult& res : results)
    if (!res.passed) ++failed;
  if (results.empty()) {
    std::cerr << "no claims matched the filter\n";
    return kExitFound;
  }
  std::cerr << results.size() << " claims, " << failed << " failing\n";
  return failed == 0 ? kExitFound : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly regular graph induced-path toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph or design");
  gen_cmd->add_option("family", gen.family, "family name")->required();
  gen_cmd->add_option("args", gen.args, "family arguments");
  gen_cmd->add_option("-o,--out", gen.out, "output path (default stdout)");
  gen_cmd->add_option("--bose", gen.sts.bose, "triple system via the bose construction");
  gen_cmd->add_option("--skolem", gen.sts.skolem, "triple system via the skolem construction");
  gen_cmd->add_option("--sts13", gen.sts.sts13_index, "one of the two order-13 systems");
  gen_cmd->add_option("--file", gen.sts.file, "triple system from a file");
  gen_cmd->add_option("--square", gen.square_file, "latin square from a file");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "search for an induced pattern");
  find_cmd->add_option("input", find.input, "graph6 file ('-' for stdin)")->required();
  find_cmd->add_option("-p,--pattern", find.pattern, "P3 P4 P5 COP5 C5 GEM COGEM")->required();
  find_cmd->add_option("-m,--mode", find.mode, "oracle | constructive | both")
      ->check(CLI::IsMember({"oracle", "constructive", "both"}));
  find_cmd->add_option("--time-budget", find.budget_seconds, "seconds (0 = unlimited)");

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand("witness", "extract a constructive witness");
  wit_cmd->add_option("kind", wit.op, "p4 explicit latin-p5 latin-cop5 mols-p5 mols-cop5 sts-p5 sts-cop5")
      ->required();
  wit_cmd->add_option("args", wit.args, "kind-specific arguments");
  wit_cmd->add_option("--cyclic", wit.cyclic, "use the cyclic square/pair of this order");
  wit_cmd->add_option("--first", wit.first_file, "first latin square file");
  wit_cmd->add_option("--second", wit.second_file, "second latin square file");
  wit_cmd->add_option("--bose", wit.sts.bose, "triple system via the bose construction");
  wit_cmd->add_option("--skolem", wit.sts.skolem, "triple system via the skolem construction");
  wit_cmd->add_option("--sts13", wit.sts.sts13_index, "one of the two order-13 systems");

  std::string check_input;
  auto* check_cmd = app.add_subcommand("check", "report structural properties");
  check_cmd->add_option("input", check_input, "graph6 file ('-' for stdin)")->required();

  SurveyArgs survey;
  auto* survey_cmd = app.add_subcommand("survey", "classify a corpus of graphs");
  survey_cmd->add_option("manifest", survey.manifest, "manifest file");
  survey_cmd->add_flag("--builtin", survey.builtin, "include the generated catalog");
  survey_cmd->add_option("--time-budget", survey.budget_seconds,
                         "seconds of oracle search per graph (default 60)");
  survey_cmd->add_option("-f,--format", survey.format, "csv | jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  survey_cmd->add_option("-o,--out", survey.out, "output path (default stdout)");
  survey_cmd->add_option("--threads", survey.threads,
                         "worker threads (default: SRG_PATHS_THREADS or hardware)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in claim suite");
  verify_cmd->add_option("--only", verify.options.only, "run only claims containing this string");
  verify_cmd->add_option("--seed", verify.options.seed, "seed for the randomized suite");
  verify_cmd->add_option("--random-graphs", verify.options.random_graph_count,
                         "randomized suite size");
  verify_cmd->add_option("--data-dir", verify.options.data_dir, "fixture directory");
  verify_cmd->add_flag("--inject-fault", verify.options.inject_fault,
                       "corrupt one catalog graph (negative control)");
  verify_cmd->add_option("-o,--out", verify.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*find_cmd) return run_find(find);
    if (*wit_cmd) return run_witness(wit);
    if (*check_cmd) return run_check(check_input);
    if (*survey_cmd) return run_survey(survey);
    if (*verify_cmd) return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
