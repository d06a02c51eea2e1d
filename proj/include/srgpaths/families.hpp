#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "srgpaths/graph.hpp"
#include "srgpaths/srg.hpp"

namespace srgpaths {

enum class FamilyKind {
  Johnson2,
  Kneser2,
  Hamming2,
  Petersen,
  CompleteMultipartite,
  LatinSquare,
  Mols,
  PseudoLatin,
  StsBlock,
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> family_from_name(std::string_view name);

/// Johnson graph J(m,2): vertices are the 2-subsets of {1..m} in
/// lexicographic order, adjacent when the subsets share a point.
/// Labels are "ij" for points below 10, "i,j" otherwise. Requires m >= 2.
Graph johnson2(int m);

/// Kneser graph K(m,2): complement of J(m,2), same vertex order and labels.
Graph kneser2(int m);

/// Hamming graph H(2,m): ordered pairs over {0..m-1} (vertex a*m+b),
/// adjacent when they agree in exactly one coordinate. Requires m >= 1.
Graph hamming2(int m);

/// The Petersen graph, realised as K(5,2).
Graph petersen();

/// K_{r x m}: r groups of m vertices, edges exactly between groups.
Graph complete_multipartite(int parts, int part_size);

/// Expected strongly-regular parameters of a family member.
/// Argument conventions (BadOrder outside the stated range):
///   Johnson2, Kneser2          a = m >= 4
///   Hamming2                   a = m >= 2
///   Petersen                   arguments ignored
///   CompleteMultipartite       a = r >= 1, b = m >= 1
///   LatinSquare                a = m >= 3
///   Mols                       a = m >= 4
///   PseudoLatin                a = m, b = t >= 1, m >= t + 2
///   StsBlock                   a = m, m = 1 or 3 (mod 6), m >= 3
SrgParams expected_params(FamilyKind kind, int a, int b = 0);

/// m x m array over symbols {0..m-1}, each symbol once per row and column.
class LatinSquare {
 public:
  LatinSquare(int order, std::vector<int> cells);  // row-major; throws NotLatin

  int order() const { return m_; }
  int at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * m_ + c]; }
  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const LatinSquare&) const = default;

 private:
  int m_;
  std::vector<int> cells_;
};

/// cells[i][j] = (i + j) mod m.
LatinSquare cyclic_latin(int m);

/// Two Latin squares of equal order whose superimposition covers every
/// ordered symbol pair exactly once. Verified on construction.
class MolsPair {
 public:
  MolsPair(LatinSquare first, LatinSquare second);  // throws NotOrthogonal

  const LatinSquare& first() const { return first_; }
  const LatinSquare& second() const { return second_; }
  int order() const { return first_.order(); }

 private:
  LatinSquare first_;
  LatinSquare second_;
};

/// The cyclic orthogonal pair (i+j, 2i+j) mod m. Requires odd m >= 3.
MolsPair orthogonal_pair(int m);

/// Cells of the square as vertices (index r*m+c, label "(r,c):s"), adjacent
/// when in the same row, same column, or carrying the same symbol.
Graph latin_square_graph(const LatinSquare& square);

/// As latin_square_graph with the extra rule: adjacent when sharing a
/// symbol in either square. Labels "(r,c):s,t".
Graph mols_graph(const MolsPair& pair);

using Block = std::array<int, 3>;

/// Steiner triple system on points {1..m}: every point pair lies in
/// exactly one block. Blocks are normalised to sorted triples in
/// lexicographic order.
class SteinerTripleSystem {
 public:
  SteinerTripleSystem(int points, std::vector<Block> blocks);  // throws NotSts

  int points() const { return m_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<int> block_index(const Block& b) const;

  bool operator==(const SteinerTripleSystem&) const = default;

 private:
  int m_;
  std::vector<Block> blocks_;
};

/// Bose construction, m = 3 (mod 6), m >= 3.
SteinerTripleSystem bose_sts(int m);

/// Skolem construction, m = 1 (mod 6), m >= 7.
SteinerTripleSystem skolem_sts(int m);

/// The two Steiner triple systems of order 13 (index 1 or 2; BadIndex
/// otherwise).
SteinerTripleSystem sts13(int index);

/// Block-intersection graph: one vertex per block (label "p q r"),
/// adjacent when the blocks share a point.
Graph sts_block_graph(const SteinerTripleSystem& system);

/// Index of the 2-subset {i,j} (1-based, i < j) in johnson2(m) vertex order.
int johnson2_vertex(int m, int i, int j);

}  // namespace srgpaths
