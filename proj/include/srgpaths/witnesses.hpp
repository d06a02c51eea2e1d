#pragma once

#include <string>

#include "srgpaths/families.hpp"
#include "srgpaths/graph.hpp"
#include "srgpaths/patterns.hpp"

namespace srgpaths {

/**
 * An explicit induced-pattern occurrence extracted by a deterministic
 * construction. For path patterns the vertices are listed in path order;
 * for co-P5 they follow the construction's natural order (triangle cells
 * first). Every witness is re-validated against the pattern model before
 * being returned, so a Witness in hand is always sound.
 *
 * branch records which rule produced it:
 *   "a".."d"  the four parameter cases of p4_witness
 *   "figure"  a fixed explicit witness (explicit_witness)
 *   "greedy"  a greedy construction (latin/mols/sts builders)
 *   "oracle"  exhaustive-search fallback (sts_p5 at small orders)
 */
struct Witness {
  PatternKind pattern = PatternKind::P4;
  VertexList vertices;
  std::string branch;

  bool operator==(const Witness&) const = default;
};

/**
 * Induced P4 in a primitive strongly regular graph, chosen by the case
 * split on (lambda, mu) with least-index selection at every free choice:
 *   (a) lambda = 0, mu = 1   four consecutive vertices of a 5-cycle
 *   (b) lambda = 0, mu > 1   path x,u,v,w with x in G1(u) \ G1(w)
 *   (c) lambda > 0, mu <= lambda + 1   path u,v,w,x extended into G2(u)
 *   (d) lambda > 0, mu > lambda + 1    path w,u,x,v around a non-edge
 *
 * Throws NotSrg / ImprimitiveInput on bad input; ProofViolation if a
 * candidate set is empty (unreachable on valid input).
 */
Witness p4_witness(const Graph& g);

/// The fixed explicit witnesses for the Johnson and Hamming families:
///   johnson2 + P5   (m >= 6)  pairs 12, 23, 34, 45, 56
///   johnson2 + CoP5 (m >= 5)  pairs 12, 34, 15, 23, 14
///   hamming2 + P5   (m >= 3)  cells 00, 01, 11, 12, 22
///   hamming2 + CoP5 (m >= 3)  cells 00, 01, 02, 10, 11
/// Throws BelowThreshold under the stated bound.
Witness explicit_witness(FamilyKind kind, PatternKind pattern, int m);

/// Greedy induced P5 in a Latin square graph, m >= 5 (BadOrder below).
Witness latin_p5(const LatinSquare& square);

/// Greedy induced co-P5 in a Latin square graph, m >= 6 (BadOrder below).
Witness latin_cop5(const LatinSquare& square);

/// Greedy induced P5 in an orthogonal-pair graph, m >= 8 (BadOrder below).
Witness mols_p5(const MolsPair& pair);

/// Greedy induced co-P5 in an orthogonal-pair graph, m >= 10 (BadOrder below).
Witness mols_cop5(const MolsPair& pair);

/// Induced P5 in a block-intersection graph, m >= 13 (BelowThreshold
/// below). Constructive for m >= 19; for m in {13, 15}, where the
/// counting argument is too weak, falls back to the exhaustive oracle.
Witness sts_p5(const SteinerTripleSystem& system);

/// Induced co-P5 in a block-intersection graph, constructive for every
/// m >= 13 (BelowThreshold below).
Witness sts_cop5(const SteinerTripleSystem& system);

}  // namespace srgpaths
