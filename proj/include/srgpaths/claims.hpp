#pragma once

#include <string>
#include <vector>

#include "srgpaths/graph.hpp"

namespace srgpaths {

/**
 * The built-in claim suite: every documented parameter formula, witness
 * construction, pattern threshold and format round-trip the library
 * promises, executed as exact checks. This is the engine behind the
 * verify-paper command and the acceptance tests.
 */
struct ClaimOptions {
  std::string only;              // run only claims whose id contains this
  std::string data_dir;          // fixture directory; default from build config
  unsigned seed = 0x5ee3d04u;    // randomized cograph suite seed
  int random_graph_count = 10000;
  bool inject_fault = false;     // corrupt one catalog graph (negative control)
};

struct ClaimResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

std::vector<ClaimResult> run_claim_suite(const ClaimOptions& options = {});

/// CSV rendering (claim,status,detail), byte-identical across runs with
/// equal options.
std::string claim_report_csv(const std::vector<ClaimResult>& results);

/// Claim-id prefix groups in suite order, for per-group rollups.
struct ClaimGroup {
  std::string title;
  std::vector<std::string> prefixes;
};
const std::vector<ClaimGroup>& claim_groups();

/// Every named graph instance the suite exercises (generator families at
/// their documented orders). Used by the claim suite and the survey
/// command's built-in mode.
struct CatalogEntry {
  std::string name;
  Graph graph;
};
std::vector<CatalogEntry> generated_catalog();

std::string default_data_dir();

}  // namespace srgpaths
