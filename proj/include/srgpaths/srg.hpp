#pragma once

#include <optional>
#include <string>

#include "srgpaths/graph.hpp"

namespace srgpaths {

/**
 * Parameter quadruple (n, k, lambda, mu) of a strongly regular graph:
 * n vertices, degree k, adjacent pairs share lambda common neighbours,
 * non-adjacent pairs share mu.
 *
 * Conventions for degenerate cases: a complete graph reports
 * (n, n-1, n-2, 0) and an edgeless graph (n, 0, 0, 0); when one side has
 * no pairs at all, the corresponding count defaults to 0.
 */
struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool operator==(const SrgParams&) const = default;
};

std::string to_string(const SrgParams& p);  // "(n,k,lambda,mu)"

/// Throws InfeasibleResult unless 0 <= k < n, 0 <= lambda <= k,
/// 0 <= mu <= k, and k(k-lambda-1) = (n-k-1)mu (vacuous for k = n-1).
void validate(const SrgParams& p);

/// The quadruple of g, or nullopt when g is not strongly regular.
std::optional<SrgParams> srg_params(const Graph& g);

/// Parameters of the complement: (n, n-k-1, n-2k+mu-2, n-2k+lambda).
/// Throws InfeasibleResult when the input is invalid or any output
/// component is negative.
SrgParams complement_params(const SrgParams& p);

/// True when both g and its complement are connected. Single-vertex
/// graphs are treated as degenerate and report false. Throws NotSrg
/// when g is not strongly regular.
bool is_primitive(const Graph& g);

/// Shape of a complete multipartite graph: parts of equal size.
struct MultipartiteShape {
  int parts = 0;      // r >= 2
  int part_size = 0;  // m >= 1

  bool operator==(const MultipartiteShape&) const = default;
};

/// The (r, m) with g isomorphic to K_{r x m}, recovered from the
/// connected components of the complement; nullopt when no such shape
/// exists.
std::optional<MultipartiteShape> multipartite_decomposition(const Graph& g);

}  // namespace srgpaths
