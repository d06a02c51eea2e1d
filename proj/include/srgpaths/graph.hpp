#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgpaths/errors.hpp"

namespace srgpaths {

using Edge = std::pair<int, int>;

/// Ordered list of distinct vertex indices into a Graph.
using VertexList = std::vector<int>;

/**
 * Immutable simple graph with bitset adjacency rows.
 *
 * Rows are packed in 64-bit words so neighbourhood intersections and
 * common-neighbour counts are word-parallel. No loops, undirected.
 * Vertices are 0-indexed; optional per-vertex labels carry domain names
 * (pairs, cells, blocks) for reporting only and never affect semantics.
 * Equality compares vertex count and edge set; labels are ignored.
 */
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int size() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, falling back to its index when the graph is unlabelled.
  std::string label(int v) const;

  /// Words per adjacency row; row(u) points at that many uint64s.
  int row_words() const { return words_; }
  const std::uint64_t* row(int u) const {
    return bits_.data() + static_cast<std::size_t>(u) * words_;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

  void check_vertex(int u) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

struct DistanceLayers {
  int source = 0;
  std::vector<std::vector<int>> layers;  // layers[i]: vertices at distance i, ascending
  std::vector<int> unreachable;          // ascending
};

/// Same vertices and labels, complemented edge set.
Graph complement(const Graph& g);

/// Subgraph induced by vs; vertex i of the result is vs[i].
/// Throws InvalidVertex on out-of-range or duplicated indices.
Graph induced_subgraph(const Graph& g, const VertexList& vs);

/// Breadth-first distance partition from the given source.
DistanceLayers distance_layers(const Graph& g, int source);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

/// Exact isomorphism test by permutation search with a degree-sequence
/// prefilter. Both graphs must have at most 8 vertices (TooLarge otherwise).
bool isomorphic_small(const Graph& g, const Graph& h);

int common_neighbor_count(const Graph& g, int u, int v);
bool is_connected(const Graph& g);  // graphs with fewer than 2 vertices count as connected
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace srgpaths
