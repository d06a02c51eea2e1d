#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string_view>

#include "srgpaths/graph.hpp"

namespace srgpaths {

/**
 * The named target patterns on at most 5 vertices.
 *
 * Model vertex order fixes the reported witness order:
 *   P3, P4, P5  - path order 0-1-2(-3)(-4)
 *   CoP5        - complement of the P5 model in the same vertex order
 *                 (a 3-cycle {0,2,4} and a 4-cycle 0-3-1-4 sharing edge 0-4)
 *   C5          - cycle 0-1-2-3-4-0
 *   Gem         - P4 on 0-1-2-3 plus vertex 4 adjacent to all four
 *   CoGem       - complement of the gem model
 */
enum class PatternKind { P3, P4, P5, CoP5, C5, Gem, CoGem };

inline constexpr std::array<PatternKind, 7> kAllPatterns = {
    PatternKind::P3,   PatternKind::P4,  PatternKind::P5,   PatternKind::CoP5,
    PatternKind::C5,   PatternKind::Gem, PatternKind::CoGem};

const Graph& pattern_model(PatternKind kind);
std::string_view pattern_name(PatternKind kind);
std::optional<PatternKind> pattern_from_name(std::string_view name);  // case-insensitive

/// Result of an induced-pattern search. When found, witness[i] is the
/// graph vertex playing pattern vertex i; the witness set is the
/// lexicographically least inducing subset and, among its embeddings,
/// the lexicographically least pattern-order mapping.
struct SearchOutcome {
  bool found = false;
  VertexList witness;

  bool operator==(const SearchOutcome&) const = default;
};

/// Exhaustive induced-subgraph search, pruned by partial embeddings and
/// pattern degree bounds. Deterministic: identical inputs give identical
/// witnesses.
SearchOutcome find_induced(const Graph& g, PatternKind pattern);

/// Same search under a wall-clock budget; nullopt when the budget expires.
std::optional<SearchOutcome> find_induced_within(const Graph& g, PatternKind pattern,
                                                 std::chrono::nanoseconds budget);

/// Cograph test by the complement-reduction rule: every connected
/// component on 2+ vertices must have a disconnected complement whose
/// components are again cographs. Independent of find_induced so the
/// two can cross-validate.
bool is_cograph(const Graph& g);

}  // namespace srgpaths
