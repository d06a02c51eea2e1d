#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "srgpaths/claims.hpp"
#include "srgpaths/formats.hpp"
#include "srgpaths/srg.hpp"

using namespace srgpaths;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kDataDir = SRGPATHS_DATA_DIR;

}  // namespace

TEST_CASE("graph6 reference encodings") {
  // Values cross-checked against an independent graph6 implementation.
  CHECK(write_graph6(complete_graph(1)) == "@");
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(write_graph6(path_graph(4)) == "Ch");
  CHECK(write_graph6(complete_multipartite(2, 3)) == "EFz_");
  CHECK(write_graph6(johnson2(5)) == "I~qkzXZLw");
  CHECK(write_graph6(kneser2(5)) == "I?LRCecq?");
  CHECK(write_graph6(hamming2(3)) == "H{S{aSf");

  CHECK(parse_graph6("@") == complete_graph(1));
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("Dhc") == cycle_graph(5));

  const Graph pete = parse_graph6("IheA@GUAo");
  CHECK(srg_params(pete) == SrgParams{10, 3, 0, 1});
  CHECK(girth(pete) == 5);

  const std::string random20 = "S[`IhBy\\^XSfGpi@pRhJPNHjoU@_GWtCg";
  CHECK(write_graph6(parse_graph6(random20)) == random20);
}

TEST_CASE("graph6 long size form") {
  // A 70-vertex edgeless graph: '~' header then an all-zero bit field.
  std::string line = "~?@E";
  line.append((70 * 69 / 2 + 5) / 6, '?');
  const Graph g = parse_graph6(line);
  CHECK(g.size() == 70);
  CHECK(g.edge_count() == 0);
  CHECK(write_graph6(g) == line);  // long form is canonical at this order

  // Long-form encodings of small orders are accepted on input.
  CHECK(parse_graph6("~??@") == complete_graph(1));
  CHECK(write_graph6(parse_graph6("~??@")) == "@");
}

TEST_CASE("graph6 defects carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(parse_graph6("Dhc "), MalformedGraph6);   // space outside alphabet
  CHECK_THROWS_AS(parse_graph6("Dh"), MalformedGraph6);     // truncated bit field
  CHECK_THROWS_AS(parse_graph6("Dhcc"), MalformedGraph6);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("A`"), MalformedGraph6);     // nonzero padding
  CHECK_THROWS_AS(parse_graph6("~@?@"), TooLarge);          // order 4097

  bool caught = false;
  try {
    parse_graph6(std::string("Dh") + '\x19' + "c");
  } catch (const MalformedGraph6& e) {
    caught = true;
    CHECK(e.offset() == 2);
  }
  CHECK(caught);
}

TEST_CASE("graph6 round-trips over random graphs") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng() % 80);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, edges);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("latin square text") {
  const std::string ls6 =
      "0 1 2 3 4 5\n"
      "1 2 3 4 5 0\n"
      "2 3 4 5 0 1\n"
      "3 4 5 0 1 2\n"
      "4 5 0 1 2 3\n"
      "5 0 1 2 3 4\n";
  CHECK(parse_latin(ls6) == cyclic_latin(6));
  CHECK(write_latin(cyclic_latin(6)) == ls6);
  CHECK(parse_latin("0") == cyclic_latin(1));
  CHECK(parse_latin("0\n") == cyclic_latin(1));

  for (int m = 1; m <= 12; ++m)
    CHECK(parse_latin(write_latin(cyclic_latin(m))) == cyclic_latin(m));

  CHECK_THROWS_AS(parse_latin("0 1\n1 0\n0 1\n"), Ragged);  // three rows of two
  CHECK_THROWS_AS(parse_latin("0 1\n1\n"), Ragged);
  CHECK_THROWS_AS(parse_latin("0 x\n1 0\n"), Ragged);
  CHECK_THROWS_AS(parse_latin(""), Ragged);
  CHECK_THROWS_WITH_AS(parse_latin("0 1\n0 1\n"), doctest::Contains("column 0"), NotLatin);
  CHECK_THROWS_WITH_AS(parse_latin("0 0\n1 1\n"), doctest::Contains("row 0"), NotLatin);
  CHECK_THROWS_AS(parse_latin("0 2\n2 0\n"), NotLatin);  // symbol out of range
}

TEST_CASE("triple system text") {
  CHECK(parse_sts("3\n1 2 3\n") == bose_sts(3));
  CHECK(parse_sts(write_sts(sts13(1))) == sts13(1));
  for (int m : {7, 9, 13, 15, 19}) {
    const SteinerTripleSystem s = m % 6 == 3 ? bose_sts(m) : skolem_sts(m);
    CHECK(parse_sts(write_sts(s)) == s);
  }

  CHECK_THROWS_WITH_AS(parse_sts("7\n1 2 3\n1 2 3\n1 4 5\n2 4 6\n3 4 7\n1 6 7\n2 5 7\n"),
                       doctest::Contains("covered twice"), NotSts);
  CHECK_THROWS_AS(parse_sts("7\n1 2 3\n"), NotSts);       // wrong block count
  CHECK_THROWS_AS(parse_sts("3\n1 2 3 4\n"), NotSts);     // four points in a block
  CHECK_THROWS_AS(parse_sts("3\n1 2\n"), NotSts);
  CHECK_THROWS_AS(parse_sts(""), NotSts);
  CHECK_THROWS_AS(parse_sts("5\n"), NotSts);              // 5 is not 1 or 3 mod 6
}

TEST_CASE("the order-13 fixture files load and match") {
  for (int idx : {1, 2}) {
    const std::string text = read_file(kDataDir + "/sts13-" + std::to_string(idx) + ".txt");
    CHECK(parse_sts(text) == sts13(idx));
  }
}

TEST_CASE("any single-digit corruption of the fixtures is rejected") {
  for (int idx : {1, 2}) {
    const std::string text = read_file(kDataDir + "/sts13-" + std::to_string(idx) + ".txt");
    int mutations = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') continue;
      std::string corrupt = text;
      corrupt[i] = static_cast<char>('0' + (text[i] - '0' + 1) % 10);
      ++mutations;
      CHECK_THROWS_AS(parse_sts(corrupt), Error);
    }
    CHECK(mutations > 100);
  }
}

TEST_CASE("report emission") {
  CHECK(emit_report({}, ReportFormat::Csv) ==
        "name,n,k,lambda,mu,primitive,pattern,found,witness,elapsed_ms,note\n");
  CHECK(emit_report({}, ReportFormat::JsonLines).empty());

  ReportRow pete;
  pete.name = "petersen";
  pete.params = SrgParams{10, 3, 0, 1};
  pete.primitive = true;
  pete.findings.push_back({PatternKind::P5, true, {"0", "1", "2", "6", "9"}});
  pete.findings.push_back({PatternKind::CoP5, false, {}});
  ReportRow broken;
  broken.name = "broken graph";
  broken.note = "parse error: bad byte";

  const std::vector<ReportRow> rows = {pete, broken};
  const std::string csv = emit_report(rows, ReportFormat::Csv);
  CHECK(csv.find("P5,true") != std::string::npos);
  CHECK(csv.find("COP5,false") != std::string::npos);
  CHECK(csv.find("0|1|2|6|9") != std::string::npos);
  CHECK(csv.find("petersen,10,3,0,1,true") != std::string::npos);
  CHECK(csv.find("petersen") < csv.find("broken graph"));  // input order

  const std::string jsonl = emit_report(rows, ReportFormat::JsonLines);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
  CHECK(jsonl.find("\"found\":true") != std::string::npos);
}
