#include "srgpaths/claims.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "srgpaths/families.hpp"
#include "srgpaths/formats.hpp"
#include "srgpaths/patterns.hpp"
#include "srgpaths/srg.hpp"
#include "srgpaths/witnesses.hpp"

namespace srgpaths {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

Graph remove_least_edge(const Graph& g) {
  auto edges = g.edges();
  require(!edges.empty(), "cannot remove an edge from an edgeless graph");
  edges.erase(edges.begin());
  return Graph(g.size(), edges, g.labels());
}

SteinerTripleSystem catalog_sts(int m) {
  if (m == 13) return sts13(1);
  return m % 6 == 3 ? bose_sts(m) : skolem_sts(m);
}

std::string expected_p4_branch(const SrgParams& p) {
  if (p.lambda == 0) return p.mu == 1 ? "a" : "b";
  return p.mu <= p.lambda + 1 ? "c" : "d";
}

Graph random_graph(std::mt19937& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  const int percent = static_cast<int>(rng() % 101);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Runner {
  const ClaimOptions& opts;
  std::vector<ClaimResult> results;

  void claim(const std::string& id, const std::function<std::string()>& body) {
    if (!opts.only.empty() && id.find(opts.only) == std::string::npos) return;
    try {
      results.push_back({id, true, body()});
    } catch (const std::exception& e) {
      results.push_back({id, false, e.what()});
    }
  }
};

std::vector<std::string> witness_labels(const Graph& g, const VertexList& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.label(v));
  return out;
}

// A witness is accepted only on the say-so of the primitives it is
// checked against, never the construction that produced it.
void check_witness(const Graph& g, PatternKind pattern, const Witness& w) {
  require(w.pattern == pattern, "witness carries the wrong pattern tag");
  require(isomorphic_small(induced_subgraph(g, w.vertices), pattern_model(pattern)),
          "witness does not induce the pattern");
}

}  // namespace

std::string default_data_dir() {
#ifdef SRGPATHS_DATA_DIR
  return SRGPATHS_DATA_DIR;
#else
  return "data";
#endif
}

std::vector<CatalogEntry> generated_catalog() {
  std::vector<CatalogEntry> out;
  for (int m = 4; m <= 8; ++m)
    out.push_back({"johnson2(" + std::to_string(m) + ")", johnson2(m)});
  for (int m = 5; m <= 8; ++m)
    out.push_back({"kneser2(" + std::to_string(m) + ")", kneser2(m)});
  for (int m = 2; m <= 6; ++m)
    out.push_back({"hamming2(" + std::to_string(m) + ")", hamming2(m)});
  for (int m = 3; m <= 7; ++m)
    out.push_back({"latin(" + std::to_string(m) + ")", latin_square_graph(cyclic_latin(m))});
  for (int m : {5, 7, 9, 11})
    out.push_back({"mols(" + std::to_string(m) + ")", mols_graph(orthogonal_pair(m))});
  for (int m : {7, 9, 13, 15})
    out.push_back({"sts-block(" + std::to_string(m) + ")", sts_block_graph(catalog_sts(m))});
  for (int r = 1; r <= 4; ++r)
    for (int m = 1; m <= 4; ++m)
      out.push_back({"multipartite(" + std::to_string(r) + "x" + std::to_string(m) + ")",
                     complete_multipartite(r, m)});
  out.push_back({"petersen", petersen()});
  out.push_back({"c5", cycle_graph(5)});
  return out;
}

const std::vector<ClaimGroup>& claim_groups() {
  static const std::vector<ClaimGroup> groups = {
      {"parameter agreement", {"params/"}},
      {"induced P4 dichotomy", {"p4/"}},
      {"cograph equivalence", {"cograph-equivalence/"}},
      {"johnson thresholds and figures", {"johnson/"}},
      {"hamming thresholds and figures", {"hamming/"}},
      {"latin square and mols witnesses", {"latin/", "mols/"}},
      {"triple system witnesses", {"sts/"}},
      {"pattern survey evidence", {"survey/"}},
      {"report determinism", {"determinism/"}},
      {"format round-trips", {"roundtrip/"}},
  };
  return groups;
}

std::vector<ClaimResult> run_claim_suite(const ClaimOptions& options) {
  Runner r{options, {}};
  const std::string data_dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;

  auto catalog = generated_catalog();
  if (options.inject_fault) {
    for (CatalogEntry& entry : catalog)
      if (entry.name == "kneser2(5)") entry.graph = remove_least_edge(entry.graph);
  }
  auto catalog_graph = [&](const std::string& name) -> const Graph& {
    for (const CatalogEntry& entry : catalog)
      if (entry.name == name) return entry.graph;
    throw Error("no catalog entry named " + name);
  };

  // --- parameter agreement -------------------------------------------------
  auto params_claim = [&](const std::string& name, FamilyKind kind, int a, int b = 0) {
    r.claim("params/" + name, [&, name, kind, a, b] {
      const SrgParams expected = expected_params(kind, a, b);
      const auto measured = srg_params(catalog_graph(name));
      require(measured.has_value(), "graph is not strongly regular");
      require(*measured == expected,
              "expected " + to_string(expected) + ", measured " + to_string(*measured));
      return to_string(expected);
    });
  };
  for (int m = 4; m <= 8; ++m)
    params_claim("johnson2(" + std::to_string(m) + ")", FamilyKind::Johnson2, m);
  for (int m = 5; m <= 8; ++m)
    params_claim("kneser2(" + std::to_string(m) + ")", FamilyKind::Kneser2, m);
  for (int m = 2; m <= 6; ++m)
    params_claim("hamming2(" + std::to_string(m) + ")", FamilyKind::Hamming2, m);
  for (int m = 3; m <= 7; ++m)
    params_claim("latin(" + std::to_string(m) + ")", FamilyKind::LatinSquare, m);
  for (int m : {5, 7, 9, 11})
    params_claim("mols(" + std::to_string(m) + ")", FamilyKind::Mols, m);
  for (int m : {7, 9, 13, 15})
    params_claim("sts-block(" + std::to_string(m) + ")", FamilyKind::StsBlock, m);
  for (int rr = 1; rr <= 4; ++rr)
    for (int m = 1; m <= 4; ++m)
      params_claim("multipartite(" + std::to_string(rr) + "x" + std::to_string(m) + ")",
                   FamilyKind::CompleteMultipartite, rr, m);
  r.claim("params/pseudo-latin/t=1", [&] {
    for (int m = 3; m <= 7; ++m)
      require(expected_params(FamilyKind::PseudoLatin, m, 1) ==
                  expected_params(FamilyKind::LatinSquare, m),
              "t=1 disagrees with the single-square formula at m=" + std::to_string(m));
    return std::string("matches the single-square formula for 3<=m<=7");
  });
  r.claim("params/pseudo-latin/t=2", [&] {
    for (int m : {5, 7, 9, 11})
      require(expected_params(FamilyKind::PseudoLatin, m, 2) ==
                  expected_params(FamilyKind::Mols, m),
              "t=2 disagrees with the orthogonal-pair formula at m=" + std::to_string(m));
    return std::string("matches the orthogonal-pair formula for m in {5,7,9,11}");
  });

  // --- induced P4 dichotomy ------------------------------------------------
  for (const CatalogEntry& entry : catalog) {
    r.claim("p4/" + entry.name, [&, &entry = entry] {
      const auto params = srg_params(entry.graph);
      require(params.has_value(), "graph is not strongly regular");
      if (!is_primitive(entry.graph)) {
        // Imprimitive side of the dichotomy: P4-free and a cograph.
        require(!find_induced(entry.graph, PatternKind::P4).found,
                "imprimitive graph contains an induced P4");
        require(is_cograph(entry.graph), "imprimitive graph is not a cograph");
        bool threw = false;
        try {
          p4_witness(entry.graph);
        } catch (const ImprimitiveInput&) {
          threw = true;
        }
        require(threw, "p4_witness accepted an imprimitive graph");
        return std::string("imprimitive: P4-free cograph, witness refused");
      }
      const Witness w = p4_witness(entry.graph);
      check_witness(entry.graph, PatternKind::P4, w);
      require(w.branch == expected_p4_branch(*params),
              "branch " + w.branch + " but parameters demand " + expected_p4_branch(*params));
      require(!is_cograph(entry.graph), "primitive graph claims to be a cograph");
      std::string verts;
      for (int v : w.vertices) verts += (verts.empty() ? "" : " ") + std::to_string(v);
      return "branch " + w.branch + ": " + verts;
    });
  }
  for (int rr = 1; rr <= 5; ++rr) {
    for (int m = 1; m <= 5; ++m) {
      const std::string id =
          "p4/multipartite-cograph/" + std::to_string(rr) + "x" + std::to_string(m);
      r.claim(id, [rr, m] {
        const Graph g = complete_multipartite(rr, m);
        require(is_cograph(g), "complete multipartite graph is not a cograph");
        require(!find_induced(g, PatternKind::P4).found,
                "complete multipartite graph contains an induced P4");
        return std::string("P4-free cograph");
      });
    }
  }

  // --- cograph equivalence on random graphs ---------------------------------
  r.claim("cograph-equivalence/randomized", [&] {
    std::mt19937 rng(options.seed);
    int mismatches = 0;
    for (int i = 0; i < options.random_graph_count; ++i) {
      const Graph g = random_graph(rng, 10);
      if (is_cograph(g) != !find_induced(g, PatternKind::P4).found) ++mismatches;
    }
    require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    return std::to_string(options.random_graph_count) + " graphs, seed " +
           std::to_string(options.seed) + ", 0 mismatches";
  });

  // --- johnson thresholds and figures ---------------------------------------
  for (int m = 3; m <= 8; ++m) {
    r.claim("johnson/threshold/m=" + std::to_string(m), [m] {
      const Graph g = johnson2(m);
      const bool p5 = find_induced(g, PatternKind::P5).found;
      const bool cop5 = find_induced(g, PatternKind::CoP5).found;
      require(p5 == (m >= 6), "P5 verdict off at m=" + std::to_string(m));
      require(cop5 == (m >= 5), "co-P5 verdict off at m=" + std::to_string(m));
      return std::string("P5 ") + (p5 ? "found" : "absent") + ", co-P5 " +
             (cop5 ? "found" : "absent");
    });
  }
  r.claim("johnson/figure-p5", [] {
    const Graph g = johnson2(6);
    const Witness w = explicit_witness(FamilyKind::Johnson2, PatternKind::P5, 6);
    check_witness(g, PatternKind::P5, w);
    const std::vector<std::string> expect = {"12", "23", "34", "45", "56"};
    require(witness_labels(g, w.vertices) == expect, "labels differ from the figure");
    return std::string("12 23 34 45 56");
  });
  r.claim("johnson/figure-cop5", [] {
    const Graph g = johnson2(5);
    const Witness w = explicit_witness(FamilyKind::Johnson2, PatternKind::CoP5, 5);
    check_witness(g, PatternKind::CoP5, w);
    const std::vector<std::string> expect = {"12", "34", "15", "23", "14"};
    require(witness_labels(g, w.vertices) == expect, "labels differ from the figure");
    return std::string("12 34 15 23 14");
  });
  r.claim("johnson/below-threshold", [] {
    bool threw = false;
    try {
      explicit_witness(FamilyKind::Johnson2, PatternKind::P5, 5);
    } catch (const BelowThreshold&) {
      threw = true;
    }
    require(threw, "m=5 accepted for a johnson P5 witness");
    return std::string("P5 witness refused at m=5");
  });

  // --- hamming thresholds and figures ----------------------------------------
  for (int m = 2; m <= 6; ++m) {
    r.claim("hamming/threshold/m=" + std::to_string(m), [m] {
      const Graph g = hamming2(m);
      const bool p5 = find_induced(g, PatternKind::P5).found;
      const bool cop5 = find_induced(g, PatternKind::CoP5).found;
      require(p5 == (m >= 3), "P5 verdict off at m=" + std::to_string(m));
      require(cop5 == (m >= 3), "co-P5 verdict off at m=" + std::to_string(m));
      return std::string("P5 ") + (p5 ? "found" : "absent") + ", co-P5 " +
             (cop5 ? "found" : "absent");
    });
  }
  r.claim("hamming/figure-p5", [] {
    const Graph g = hamming2(3);
    const Witness w = explicit_witness(FamilyKind::Hamming2, PatternKind::P5, 3);
    check_witness(g, PatternKind::P5, w);
    const std::vector<std::string> expect = {"00", "01", "11", "12", "22"};
    require(witness_labels(g, w.vertices) == expect, "labels differ from the figure");
    return std::string("00 01 11 12 22");
  });
  r.claim("hamming/figure-cop5", [] {
    const Graph g = hamming2(3);
    const Witness w = explicit_witness(FamilyKind::Hamming2, PatternKind::CoP5, 3);
    check_witness(g, PatternKind::CoP5, w);
    const std::vector<std::string> expect = {"00", "01", "02", "10", "11"};
    require(witness_labels(g, w.vertices) == expect, "labels differ from the figure");
    return std::string("00 01 02 10 11");
  });

  // --- latin square and mols witnesses ---------------------------------------
  for (int m = 5; m <= 12; ++m) {
    r.claim("latin/p5/m=" + std::to_string(m), [m] {
      const LatinSquare sq = cyclic_latin(m);
      const Graph g = latin_square_graph(sq);
      const Witness w = latin_p5(sq);
      check_witness(g, PatternKind::P5, w);
      require(find_induced(g, PatternKind::P5).found, "oracle disagrees");
      return std::string("validated, oracle agrees");
    });
  }
  for (int m = 6; m <= 12; ++m) {
    r.claim("latin/cop5/m=" + std::to_string(m), [m] {
      const LatinSquare sq = cyclic_latin(m);
      const Graph g = latin_square_graph(sq);
      const Witness w = latin_cop5(sq);
      check_witness(g, PatternKind::CoP5, w);
      require(find_induced(g, PatternKind::CoP5).found, "oracle disagrees");
      return std::string("validated, oracle agrees");
    });
  }
  for (int m : {9, 11}) {
    r.claim("mols/p5/m=" + std::to_string(m), [m] {
      const MolsPair pair = orthogonal_pair(m);
      const Graph g = mols_graph(pair);
      const Witness w = mols_p5(pair);
      check_witness(g, PatternKind::P5, w);
      require(find_induced(g, PatternKind::P5).found, "oracle disagrees");
      return std::string("validated, oracle agrees");
    });
  }
  for (int m : {11, 13}) {
    r.claim("mols/cop5/m=" + std::to_string(m), [m] {
      const MolsPair pair = orthogonal_pair(m);
      const Graph g = mols_graph(pair);
      const Witness w = mols_cop5(pair);
      check_witness(g, PatternKind::CoP5, w);
      require(find_induced(g, PatternKind::CoP5).found, "oracle disagrees");
      return std::string("validated, oracle agrees");
    });
  }
  r.claim("latin/fixture-p5", [] {
    // Highlighted cells of the order-6 cyclic square.
    const Graph g = latin_square_graph(cyclic_latin(6));
    const VertexList cells = {0 * 6 + 0, 0 * 6 + 1, 1 * 6 + 1, 1 * 6 + 2, 5 * 6 + 4};
    require(isomorphic_small(induced_subgraph(g, cells), pattern_model(PatternKind::P5)),
            "highlighted cells do not induce a P5");
    return std::string("(0,0) (0,1) (1,1) (1,2) (5,4)");
  });
  r.claim("latin/fixture-cop5", [] {
    const Graph g = latin_square_graph(cyclic_latin(6));
    const VertexList cells = {0 * 6 + 0, 0 * 6 + 1, 0 * 6 + 2, 3 * 6 + 0, 3 * 6 + 1};
    require(isomorphic_small(induced_subgraph(g, cells), pattern_model(PatternKind::CoP5)),
            "highlighted cells do not induce a co-P5");
    return std::string("(0,0) (0,1) (0,2) (3,0) (3,1)");
  });

  // --- triple system witnesses -----------------------------------------------
  const std::vector<std::pair<std::string, SteinerTripleSystem>> sts_instances = {
      {"sts13#1", sts13(1)},      {"sts13#2", sts13(2)},      {"bose(15)", bose_sts(15)},
      {"skolem(19)", skolem_sts(19)}, {"bose(21)", bose_sts(21)}, {"skolem(25)", skolem_sts(25)},
      {"bose(27)", bose_sts(27)},
  };
  for (const auto& [name, system] : sts_instances) {
    r.claim("sts/p5/" + name, [&, &system = system] {
      const Witness w = sts_p5(system);
      check_witness(sts_block_graph(system), PatternKind::P5, w);
      return "branch " + w.branch;
    });
    r.claim("sts/cop5/" + name, [&, &system = system] {
      const Witness w = sts_cop5(system);
      check_witness(sts_block_graph(system), PatternKind::CoP5, w);
      return "branch " + w.branch;
    });
  }
  for (int idx : {1, 2}) {
    r.claim("sts/fixture-p5/system" + std::to_string(idx), [idx] {
      // The five blocks 123, 145, 467, 689, 8-10-11 form an induced P5 in
      // both order-13 systems.
      const SteinerTripleSystem system = sts13(idx);
      const Graph g = sts_block_graph(system);
      VertexList vs;
      for (const Block& b :
           {Block{1, 2, 3}, Block{1, 4, 5}, Block{4, 6, 7}, Block{6, 8, 9}, Block{8, 10, 11}}) {
        const auto i = system.block_index(b);
        require(i.has_value(), "fixture block missing from the system");
        vs.push_back(*i);
      }
      require(isomorphic_small(induced_subgraph(g, vs), pattern_model(PatternKind::P5)),
              "fixture blocks do not induce a P5");
      return std::string("1 2 3 | 1 4 5 | 4 6 7 | 6 8 9 | 8 10 11");
    });
  }
  for (int m : {3, 7, 9}) {
    r.claim("sts/pattern-free/m=" + std::to_string(m), [m] {
      const Graph g = sts_block_graph(catalog_sts(m));
      require(!find_induced(g, PatternKind::P5).found, "found a P5 below order 13");
      require(!find_induced(g, PatternKind::CoP5).found, "found a co-P5 below order 13");
      return std::string("P5-free and co-P5-free");
    });
  }
  for (const char* op : {"p5", "cop5"}) {
    r.claim(std::string("sts/below-threshold/") + op, [op] {
      const SteinerTripleSystem s = bose_sts(9);
      bool threw = false;
      try {
        if (std::string(op) == "p5")
          sts_p5(s);
        else
          sts_cop5(s);
      } catch (const BelowThreshold&) {
        threw = true;
      }
      require(threw, "order 9 accepted");
      return std::string("refused at order 9");
    });
  }

  // --- survey evidence ---------------------------------------------------------
  r.claim("survey/petersen", [&] {
    const Graph& g = catalog_graph("petersen");
    require(find_induced(g, PatternKind::P5).found, "no induced P5 in the petersen graph");
    require(!find_induced(g, PatternKind::CoP5).found, "induced co-P5 in a girth-5 graph");
    return std::string("P5 found, co-P5 absent");
  });
  r.claim("survey/c5", [&] {
    const Graph& g = catalog_graph("c5");
    require(!find_induced(g, PatternKind::P5).found, "C5 is not a P5");
    require(!find_induced(g, PatternKind::CoP5).found, "C5 has only five vertices");
    require(find_induced(g, PatternKind::P4).found, "C5 contains an induced P4");
    return std::string("P4 found, P5 and co-P5 absent");
  });
  r.claim("survey/cop5-free-triangle-free", [&] {
    std::string free_list;
    for (const CatalogEntry& entry : catalog) {
      const auto params = srg_params(entry.graph);
      if (!params) continue;
      bool primitive = false;
      try {
        primitive = is_primitive(entry.graph);
      } catch (const NotSrg&) {
        continue;
      }
      if (!primitive) continue;
      if (find_induced(entry.graph, PatternKind::CoP5).found) continue;
      require(params->lambda == 0,
              entry.name + " is co-P5-free but contains a triangle (lambda > 0)");
      free_list += (free_list.empty() ? "" : ", ") + entry.name;
    }
    return "co-P5-free primitive members are triangle-free: " + free_list;
  });

  // --- report determinism -------------------------------------------------------
  r.claim("determinism/emit-report", [] {
    ReportRow row;
    row.name = "petersen";
    row.params = SrgParams{10, 3, 0, 1};
    row.primitive = true;
    row.findings.push_back({PatternKind::P5, true, {"0", "1", "2", "6", "9"}});
    row.findings.push_back({PatternKind::CoP5, false, {}});
    const std::vector<ReportRow> rows = {row};
    const std::string a = emit_report(rows, ReportFormat::Csv);
    const std::string b = emit_report(rows, ReportFormat::Csv);
    require(a == b, "two renderings differ");
    return std::string("byte-identical rendering");
  });

  // --- format round-trips --------------------------------------------------------
  r.claim("roundtrip/graph6-catalog", [&] {
    for (const CatalogEntry& entry : catalog) {
      const std::string line = write_graph6(entry.graph);
      require(parse_graph6(line) == entry.graph, entry.name + " fails the round trip");
      require(write_graph6(parse_graph6(line)) == line, entry.name + " re-encodes differently");
    }
    return std::to_string(catalog.size()) + " graphs round-trip";
  });
  r.claim("roundtrip/latin", [] {
    for (int m = 1; m <= 12; ++m) {
      const LatinSquare sq = cyclic_latin(m);
      require(parse_latin(write_latin(sq)) == sq,
              "order " + std::to_string(m) + " fails the round trip");
    }
    return std::string("orders 1..12 round-trip");
  });
  r.claim("roundtrip/sts", [&] {
    for (const auto& [name, system] : sts_instances)
      require(parse_sts(write_sts(system)) == system, name + " fails the round trip");
    return std::to_string(sts_instances.size()) + " systems round-trip";
  });
  for (int idx : {1, 2}) {
    r.claim("roundtrip/sts13-file/" + std::to_string(idx), [&, idx] {
      const std::string path = data_dir + "/sts13-" + std::to_string(idx) + ".txt";
      const SteinerTripleSystem loaded = parse_sts(read_file(path));
      require(loaded == sts13(idx), "file does not match the built-in system");
      return path + " loads and matches";
    });
  }

  return r.results;
}

std::string claim_report_csv(const std::vector<ClaimResult>& results) {
  auto escape = [](const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
      if (c == '"') quoted += "\"\"";
      else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
  };
  std::string out = "claim,status,detail\n";
  for (const ClaimResult& res : results)
    out += res.id + "," + (res.passed ? "pass" : "FAIL") + "," + escape(res.detail) + "\n";
  return out;
}

}  // namespace srgpaths
