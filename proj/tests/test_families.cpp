#include <doctest.h>

#include "srgpaths/families.hpp"
#include "srgpaths/patterns.hpp"
#include "srgpaths/srg.hpp"

using namespace srgpaths;

TEST_CASE("johnson, kneser and hamming generators") {
  CHECK(isomorphic_small(johnson2(4), complete_multipartite(3, 2)));
  CHECK(isomorphic_small(hamming2(2), cycle_graph(4)));
  CHECK(hamming2(1) == complete_graph(1));

  const Graph pete = kneser2(5);
  CHECK(srg_params(pete) == SrgParams{10, 3, 0, 1});
  CHECK(girth(pete) == 5);
  CHECK(petersen() == pete);

  for (int m = 4; m <= 8; ++m) CHECK(kneser2(m) == complement(johnson2(m)));

  CHECK(johnson2(6).labels()[0] == "12");
  CHECK(hamming2(3).labels()[0] == "00");
  CHECK(johnson2(12).labels()[0] == "1,2");  // two-digit points switch separator

  CHECK_THROWS_AS(johnson2(1), BadOrder);
  CHECK_THROWS_AS(hamming2(0), BadOrder);
  CHECK_THROWS_AS(johnson2(100), BadOrder);  // 4950 pairs exceed the cap
}

TEST_CASE("complete multipartite graphs") {
  CHECK(srg_params(complete_multipartite(3, 2)) == SrgParams{6, 4, 2, 4});
  CHECK(complete_multipartite(2, 1) == complete_graph(2));
  for (int r = 2; r <= 5; ++r) {
    CHECK(complete_multipartite(r, 1) == complete_graph(r));
    CHECK(is_cograph(complete_multipartite(r, 1)));
  }
}

TEST_CASE("expected parameter formulas") {
  CHECK(expected_params(FamilyKind::Johnson2, 5) == SrgParams{10, 6, 3, 4});
  CHECK(expected_params(FamilyKind::Kneser2, 5) == SrgParams{10, 3, 0, 1});
  CHECK(expected_params(FamilyKind::Hamming2, 3) == SrgParams{9, 4, 1, 2});
  CHECK(expected_params(FamilyKind::LatinSquare, 6) == SrgParams{36, 15, 6, 6});
  CHECK(expected_params(FamilyKind::Mols, 9) == SrgParams{81, 32, 13, 12});
  CHECK(expected_params(FamilyKind::PseudoLatin, 7, 2) == SrgParams{49, 24, 11, 12});
  CHECK(expected_params(FamilyKind::PseudoLatin, 7, 2) == expected_params(FamilyKind::Mols, 7));
  CHECK(expected_params(FamilyKind::StsBlock, 13) == SrgParams{26, 15, 8, 9});
  CHECK(expected_params(FamilyKind::StsBlock, 7) == SrgParams{7, 6, 5, 0});
  CHECK(expected_params(FamilyKind::CompleteMultipartite, 1, 4) == SrgParams{4, 0, 0, 0});
  CHECK_THROWS_AS(expected_params(FamilyKind::Johnson2, 3), BadOrder);
  CHECK_THROWS_AS(expected_params(FamilyKind::StsBlock, 11), BadOrder);
}

TEST_CASE("generated graphs match their parameter formulas") {
  for (int m = 4; m <= 8; ++m)
    CHECK(srg_params(johnson2(m)) == expected_params(FamilyKind::Johnson2, m));
  for (int m = 2; m <= 6; ++m)
    CHECK(srg_params(hamming2(m)) == expected_params(FamilyKind::Hamming2, m));
  for (int m = 3; m <= 7; ++m)
    CHECK(srg_params(latin_square_graph(cyclic_latin(m))) ==
          expected_params(FamilyKind::LatinSquare, m));
}

TEST_CASE("latin squares") {
  const LatinSquare ls6 = cyclic_latin(6);
  for (int i = 0; i < 6; ++i) {
    CHECK(ls6.at(i, 0) == i);  // row i starts with symbol i
    for (int j = 0; j < 6; ++j) CHECK(ls6.at(i, j) == (i + j) % 6);
  }
  CHECK(cyclic_latin(1).at(0, 0) == 0);

  CHECK_THROWS_AS(LatinSquare(2, {0, 0, 1, 1}), NotLatin);
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 0, 1}), NotLatin);
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1}), Ragged);
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1, 2}), NotLatin);
}

TEST_CASE("latin square graphs") {
  CHECK(multipartite_decomposition(latin_square_graph(cyclic_latin(3))) ==
        MultipartiteShape{3, 3});
  CHECK(srg_params(latin_square_graph(cyclic_latin(6))) == SrgParams{36, 15, 6, 6});
  CHECK(latin_square_graph(cyclic_latin(1)) == complete_graph(1));
  CHECK(latin_square_graph(cyclic_latin(2)).labels()[3] == "(1,1):0");
}

TEST_CASE("orthogonal pairs") {
  const MolsPair p5 = orthogonal_pair(5);  // validated on construction
  CHECK(p5.order() == 5);
  CHECK(srg_params(mols_graph(orthogonal_pair(9))) == SrgParams{81, 32, 13, 12});
  CHECK(srg_params(mols_graph(orthogonal_pair(5))) == expected_params(FamilyKind::Mols, 5));
  CHECK_THROWS_AS(orthogonal_pair(4), BadOrder);
  CHECK_THROWS_AS(orthogonal_pair(1), BadOrder);

  // Order 3 degenerates to a complete graph: every cell pair shares a
  // row, column or symbol, so the generic formula's mu cannot apply and
  // the parameter formula refuses the order.
  CHECK(srg_params(mols_graph(orthogonal_pair(3))) == SrgParams{9, 8, 7, 0});
  CHECK_THROWS_AS(expected_params(FamilyKind::Mols, 3), BadOrder);

  // Superimposing a square on itself repeats every diagonal pair.
  CHECK_THROWS_AS(MolsPair(cyclic_latin(5), cyclic_latin(5)), NotOrthogonal);
}

TEST_CASE("steiner triple systems") {
  const SteinerTripleSystem s9 = bose_sts(9);
  CHECK(s9.blocks().size() == 12);
  CHECK(srg_params(sts_block_graph(s9)) == SrgParams{12, 9, 6, 9});
  CHECK(multipartite_decomposition(sts_block_graph(s9)) == MultipartiteShape{4, 3});

  const SteinerTripleSystem s3 = bose_sts(3);
  CHECK(s3.blocks() == std::vector<Block>{{1, 2, 3}});
  CHECK(sts_block_graph(s3) == complete_graph(1));

  CHECK(skolem_sts(13).blocks().size() == 26);
  CHECK(sts_block_graph(skolem_sts(7)) == complete_graph(7));
  CHECK(sts_block_graph(sts13(1)).labels()[0] == "1 2 3");
  CHECK(sts_block_graph(bose_sts(9)).labels()[0] == "1 2 6");

  for (int m : {15, 21, 27}) CHECK(bose_sts(m).blocks().size() == m * (m - 1) / 6);
  for (int m : {19, 25}) CHECK(skolem_sts(m).blocks().size() == m * (m - 1) / 6);

  CHECK_THROWS_AS(bose_sts(7), BadOrder);
  CHECK_THROWS_AS(skolem_sts(9), BadOrder);
  CHECK_THROWS_AS(bose_sts(2), BadOrder);

  // Invariant violations surface as NotSts.
  std::vector<Block> dup = {{1, 2, 3}, {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                            {1, 6, 7}, {2, 5, 7}};
  CHECK_THROWS_AS(SteinerTripleSystem(7, dup), NotSts);
  CHECK_THROWS_AS(SteinerTripleSystem(8, {}), NotSts);
}

TEST_CASE("the two order-13 systems") {
  const SteinerTripleSystem s1 = sts13(1);
  const SteinerTripleSystem s2 = sts13(2);
  CHECK(s1.blocks().size() == 26);
  CHECK(s2.blocks().size() == 26);
  CHECK_FALSE(s1 == s2);
  CHECK(s1.block_index({1, 2, 3}).has_value());
  CHECK(s1.block_index({2, 5, 7}).has_value());
  CHECK(s1.block_index({5, 9, 11}).has_value());
  CHECK(s2.block_index({2, 5, 9}).has_value());
  CHECK(s2.block_index({9, 11, 13}).has_value());
  CHECK_FALSE(s2.block_index({2, 5, 7}).has_value());
  CHECK_THROWS_AS(sts13(3), BadIndex);
  CHECK_THROWS_AS(sts13(0), BadIndex);

  CHECK(srg_params(sts_block_graph(s1)) == expected_params(FamilyKind::StsBlock, 13));
  CHECK(srg_params(sts_block_graph(s2)) == expected_params(FamilyKind::StsBlock, 13));
}

TEST_CASE("family names parse") {
  CHECK(family_from_name("johnson2") == FamilyKind::Johnson2);
  CHECK(family_from_name("STS-BLOCK") == FamilyKind::StsBlock);
  CHECK_FALSE(family_from_name("paley").has_value());
}
