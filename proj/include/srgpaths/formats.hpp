#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srgpaths/families.hpp"
#include "srgpaths/graph.hpp"
#include "srgpaths/patterns.hpp"
#include "srgpaths/srg.hpp"

namespace srgpaths {

/**
 * graph6 encoding: size header, then the upper-triangle bits in
 * column-major order, 6 bits per printable byte offset by 63.
 * write uses the short size form for n <= 62 and the 3-byte long form
 * above; parse additionally accepts long-form encodings of small orders
 * and the 6-byte extended form. Padding bits must be zero and no bytes
 * may trail the bit field, so write(parse(x)) == x on every canonical
 * line.
 */
std::string write_graph6(const Graph& g);

/// Throws MalformedGraph6 (with byte offset) on any defect, TooLarge when
/// the encoded order exceeds Graph::kMaxVertices.
Graph parse_graph6(std::string_view line);

/// One row per line, symbols space-separated.
std::string write_latin(const LatinSquare& square);

/// Order taken from the first row's length. Throws Ragged on shape or
/// token defects, NotLatin on symbol violations (with coordinates).
LatinSquare parse_latin(std::string_view text);

/// Header line with the point count, then one block per line as three
/// 1-based points.
std::string write_sts(const SteinerTripleSystem& system);

/// Throws NotSts on any invariant violation, naming the first offending
/// pair for coverage defects.
SteinerTripleSystem parse_sts(std::string_view text);

enum class ReportFormat { Csv, JsonLines };

struct PatternFinding {
  PatternKind pattern = PatternKind::P4;
  bool found = false;
  std::vector<std::string> witness_labels;
};

struct ReportRow {
  std::string name;
  std::optional<SrgParams> params;
  std::optional<bool> primitive;
  std::vector<PatternFinding> findings;
  std::optional<double> elapsed_ms;
  std::string note;
};

/// Deterministic report rendering, rows in input order. CSV emits one
/// line per finding (header: name,n,k,lambda,mu,primitive,pattern,found,
/// witness,elapsed_ms,note); the JSON-lines variant emits one object per
/// row.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format);

}  // namespace srgpaths
