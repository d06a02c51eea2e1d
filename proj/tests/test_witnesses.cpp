#include <doctest.h>

#include <algorithm>
#include <random>

#include "srgpaths/families.hpp"
#include "srgpaths/patterns.hpp"
#include "srgpaths/srg.hpp"
#include "srgpaths/witnesses.hpp"

using namespace srgpaths;

namespace {

bool valid_witness(const Graph& g, PatternKind kind, const Witness& w) {
  return w.pattern == kind &&
         isomorphic_small(induced_subgraph(g, w.vertices), pattern_model(kind));
}

// Folded 5-cube: 4-bit words, adjacent when the xor has weight 1 or 4.
// The one small graph with lambda = 0 and mu > 1.
Graph clebsch() {
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      const int w = __builtin_popcount(a ^ b);
      if (w == 1 || w == 4) edges.emplace_back(a, b);
    }
  return Graph(16, edges);
}

LatinSquare scrambled_latin(int m, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> rows(m), symbols(m);
  for (int i = 0; i < m; ++i) rows[i] = symbols[i] = i;
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(symbols.begin(), symbols.end(), rng);
  std::vector<int> cells(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      cells[static_cast<std::size_t>(r) * m + c] = symbols[(rows[r] + c) % m];
  return LatinSquare(m, std::move(cells));
}

}  // namespace

TEST_CASE("p4 witness branch selection") {
  const Witness moore = p4_witness(petersen());
  CHECK(moore.branch == "a");
  CHECK(valid_witness(petersen(), PatternKind::P4, moore));
  CHECK(induced_subgraph(petersen(), moore.vertices) == path_graph(4));  // path order

  CHECK(p4_witness(cycle_graph(5)).branch == "a");

  const Graph cl = clebsch();
  REQUIRE(srg_params(cl) == SrgParams{16, 5, 0, 2});
  const Witness b = p4_witness(cl);
  CHECK(b.branch == "b");
  CHECK(valid_witness(cl, PatternKind::P4, b));

  const Witness c = p4_witness(johnson2(6));  // (15,8,4,4): mu <= lambda + 1
  CHECK(c.branch == "c");
  CHECK(valid_witness(johnson2(6), PatternKind::P4, c));
  CHECK(p4_witness(hamming2(3)).branch == "c");

  const Witness d = p4_witness(kneser2(6));  // (15,6,1,3): mu > lambda + 1
  CHECK(d.branch == "d");
  CHECK(valid_witness(kneser2(6), PatternKind::P4, d));
}

TEST_CASE("p4 witness rejects bad input") {
  CHECK_THROWS_AS(p4_witness(complete_multipartite(3, 2)), ImprimitiveInput);
  CHECK_THROWS_AS(p4_witness(complete_graph(5)), ImprimitiveInput);
  CHECK_THROWS_AS(p4_witness(path_graph(4)), NotSrg);
}

TEST_CASE("p4 witness is deterministic") {
  CHECK(p4_witness(johnson2(7)) == p4_witness(johnson2(7)));
  CHECK(p4_witness(petersen()) == p4_witness(petersen()));
}

TEST_CASE("explicit figure witnesses") {
  for (int m = 6; m <= 8; ++m) {
    const Witness w = explicit_witness(FamilyKind::Johnson2, PatternKind::P5, m);
    CHECK(w.branch == "figure");
    CHECK(valid_witness(johnson2(m), PatternKind::P5, w));
  }
  for (int m = 5; m <= 8; ++m)
    CHECK(valid_witness(johnson2(m), PatternKind::CoP5,
                        explicit_witness(FamilyKind::Johnson2, PatternKind::CoP5, m)));
  for (int m = 3; m <= 6; ++m) {
    CHECK(valid_witness(hamming2(m), PatternKind::P5,
                        explicit_witness(FamilyKind::Hamming2, PatternKind::P5, m)));
    CHECK(valid_witness(hamming2(m), PatternKind::CoP5,
                        explicit_witness(FamilyKind::Hamming2, PatternKind::CoP5, m)));
  }

  const Graph j6 = johnson2(6);
  const Witness figure = explicit_witness(FamilyKind::Johnson2, PatternKind::P5, 6);
  std::vector<std::string> labels;
  for (int v : figure.vertices) labels.push_back(j6.label(v));
  CHECK(labels == std::vector<std::string>{"12", "23", "34", "45", "56"});

  CHECK_THROWS_AS(explicit_witness(FamilyKind::Johnson2, PatternKind::P5, 5), BelowThreshold);
  CHECK_THROWS_AS(explicit_witness(FamilyKind::Johnson2, PatternKind::CoP5, 4), BelowThreshold);
  CHECK_THROWS_AS(explicit_witness(FamilyKind::Hamming2, PatternKind::P5, 2), BelowThreshold);
  CHECK_THROWS_AS(explicit_witness(FamilyKind::Kneser2, PatternKind::P5, 7), Error);
  CHECK_THROWS_AS(explicit_witness(FamilyKind::Johnson2, PatternKind::P4, 7), Error);
}

TEST_CASE("latin square witnesses") {
  for (int m = 5; m <= 12; ++m) {
    const LatinSquare sq = cyclic_latin(m);
    const Witness w = latin_p5(sq);
    CHECK(w.branch == "greedy");
    CHECK(valid_witness(latin_square_graph(sq), PatternKind::P5, w));
  }
  for (int m = 6; m <= 12; ++m) {
    const LatinSquare sq = cyclic_latin(m);
    CHECK(valid_witness(latin_square_graph(sq), PatternKind::CoP5, latin_cop5(sq)));
  }

  // Frozen selections on the order-6 cyclic square: cells in path order
  // (r*6+c); the co-P5 one equals the classic highlighted cells.
  CHECK(latin_p5(cyclic_latin(6)).vertices == VertexList{0, 1, 7, 8, 29});
  CHECK(latin_cop5(cyclic_latin(6)).vertices == VertexList{0, 1, 2, 18, 19});

  CHECK_THROWS_AS(latin_p5(cyclic_latin(4)), BadOrder);
  CHECK_THROWS_AS(latin_cop5(cyclic_latin(5)), BadOrder);

  // Normalisation handles squares whose first row is out of order.
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const int m = 5 + static_cast<int>(seed % 5);
    const LatinSquare sq = scrambled_latin(m, seed);
    CHECK(valid_witness(latin_square_graph(sq), PatternKind::P5, latin_p5(sq)));
    if (m >= 6)
      CHECK(valid_witness(latin_square_graph(sq), PatternKind::CoP5, latin_cop5(sq)));
  }
}

TEST_CASE("orthogonal pair witnesses") {
  for (int m : {9, 11}) {
    const MolsPair pair = orthogonal_pair(m);
    const Witness w = mols_p5(pair);
    CHECK(w.branch == "greedy");
    CHECK(valid_witness(mols_graph(pair), PatternKind::P5, w));
  }
  for (int m : {11, 13}) {
    const MolsPair pair = orthogonal_pair(m);
    CHECK(valid_witness(mols_graph(pair), PatternKind::CoP5, mols_cop5(pair)));
  }
  CHECK_THROWS_AS(mols_p5(orthogonal_pair(7)), BadOrder);
  CHECK_THROWS_AS(mols_cop5(orthogonal_pair(9)), BadOrder);
}

TEST_CASE("triple system witnesses") {
  for (int idx : {1, 2}) {
    const SteinerTripleSystem s = sts13(idx);
    const Graph g = sts_block_graph(s);
    const Witness p5 = sts_p5(s);
    CHECK(p5.branch == "oracle");  // the counting argument starts at order 19
    CHECK(valid_witness(g, PatternKind::P5, p5));
    const Witness cop5 = sts_cop5(s);
    CHECK(cop5.branch == "greedy");
    CHECK(valid_witness(g, PatternKind::CoP5, cop5));
  }
  CHECK(sts_p5(bose_sts(15)).branch == "oracle");
  CHECK(sts_p5(bose_sts(21)).branch == "greedy");
  CHECK(valid_witness(sts_block_graph(bose_sts(21)), PatternKind::P5, sts_p5(bose_sts(21))));
  CHECK(valid_witness(sts_block_graph(bose_sts(15)), PatternKind::CoP5, sts_cop5(bose_sts(15))));
  CHECK(valid_witness(sts_block_graph(skolem_sts(19)), PatternKind::P5, sts_p5(skolem_sts(19))));

  CHECK_THROWS_AS(sts_p5(bose_sts(9)), BelowThreshold);
  CHECK_THROWS_AS(sts_cop5(bose_sts(9)), BelowThreshold);
  CHECK_THROWS_AS(sts_p5(skolem_sts(7)), BelowThreshold);
}

TEST_CASE("block fixtures in the order-13 systems") {
  for (int idx : {1, 2}) {
    const SteinerTripleSystem s = sts13(idx);
    const Graph g = sts_block_graph(s);
    // The classic five-block path: 123, 145, 467, 689, 8-10-11.
    VertexList path;
    for (const Block& b :
         {Block{1, 2, 3}, Block{1, 4, 5}, Block{4, 6, 7}, Block{6, 8, 9}, Block{8, 10, 11}}) {
      REQUIRE(s.block_index(b).has_value());
      path.push_back(*s.block_index(b));
    }
    CHECK(induced_subgraph(g, path) == pattern_model(PatternKind::P5));
  }

  const SteinerTripleSystem s1 = sts13(1);
  const Graph g1 = sts_block_graph(s1);

  // A verified co-P5 block selection.
  VertexList house;
  for (const Block& b :
       {Block{1, 2, 3}, Block{1, 4, 5}, Block{4, 6, 7}, Block{3, 6, 12}, Block{1, 9, 10}}) {
    REQUIRE(s1.block_index(b).has_value());
    house.push_back(*s1.block_index(b));
  }
  CHECK(isomorphic_small(induced_subgraph(g1, house), pattern_model(PatternKind::CoP5)));

  // A near-miss with seven intersecting pairs is not a co-P5.
  VertexList seven;
  for (const Block& b :
       {Block{1, 2, 3}, Block{1, 4, 5}, Block{1, 9, 10}, Block{2, 4, 8}, Block{4, 6, 7}})
    seven.push_back(*s1.block_index(b));
  CHECK(induced_subgraph(g1, seven).edge_count() == 7);
  CHECK_FALSE(isomorphic_small(induced_subgraph(g1, seven), pattern_model(PatternKind::CoP5)));

  // The frozen sts_cop5 output on the first system.
  const Witness w = sts_cop5(s1);
  VertexList expect;
  for (const Block& b :
       {Block{1, 2, 3}, Block{1, 4, 5}, Block{1, 12, 13}, Block{2, 6, 10}, Block{4, 6, 7}})
    expect.push_back(*s1.block_index(b));
  CHECK(w.vertices == expect);
}

TEST_CASE("constructive success coincides with the oracle") {
  for (int m = 5; m <= 9; ++m) {
    const LatinSquare sq = cyclic_latin(m);
    const Graph g = latin_square_graph(sq);
    CHECK(find_induced(g, PatternKind::P5).found);   // latin_p5 succeeded above
    if (m >= 6) CHECK(find_induced(g, PatternKind::CoP5).found);
  }
  // Below every threshold the oracle confirms absence.
  CHECK_FALSE(find_induced(sts_block_graph(bose_sts(9)), PatternKind::P5).found);
  CHECK_FALSE(find_induced(sts_block_graph(bose_sts(9)), PatternKind::CoP5).found);
  CHECK_FALSE(find_induced(johnson2(5), PatternKind::P5).found);
}
