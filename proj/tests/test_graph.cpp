#include <doctest.h>

#include <algorithm>
#include <random>

#include "srgpaths/claims.hpp"
#include "srgpaths/families.hpp"
#include "srgpaths/graph.hpp"

using namespace srgpaths;

namespace {

Graph random_graph(std::mt19937& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  const int percent = static_cast<int>(rng() % 101);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction validates its invariants") {
  const std::vector<Edge> loop = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), InvalidVertex);
  const std::vector<Edge> oob = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, oob), InvalidVertex);
  CHECK_THROWS_AS(Graph(4097, {}), TooLarge);
  CHECK_THROWS_AS(Graph(-1, {}), TooLarge);
  CHECK_THROWS_AS(Graph(2, {}, {"only-one"}), Error);

  const std::vector<Edge> dup = {{0, 1}, {1, 0}, {0, 1}};
  const Graph g(3, dup);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("complement is an involution and preserves labels") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 10);
    CHECK(complement(complement(g)) == g);
  }
  const Graph labelled(2, std::vector<Edge>{}, {"x", "y"});
  CHECK(complement(labelled).labels() == std::vector<std::string>{"x", "y"});
  CHECK(isomorphic_small(cycle_graph(5), complement(cycle_graph(5))));
}

TEST_CASE("induced subgraph") {
  const Graph g = path_graph(5);
  VertexList all = {0, 1, 2, 3, 4};
  CHECK(induced_subgraph(g, all) == g);
  CHECK(induced_subgraph(g, {2}).size() == 1);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 5}), InvalidVertex);
  CHECK_THROWS_AS(induced_subgraph(g, {1, 1}), InvalidVertex);

  // Reordering vertices relabels the edges accordingly.
  const Graph sub = induced_subgraph(g, {4, 3, 0, 1});
  CHECK(sub.adjacent(0, 1));  // 4-3
  CHECK(sub.adjacent(2, 3));  // 0-1
  CHECK_FALSE(sub.adjacent(1, 2));
}

TEST_CASE("figure subsets of the johnson and hamming graphs") {
  const Graph j6 = johnson2(6);
  VertexList p5_pairs;
  for (int i = 1; i <= 5; ++i) p5_pairs.push_back(johnson2_vertex(6, i, i + 1));
  CHECK(isomorphic_small(induced_subgraph(j6, p5_pairs), path_graph(5)));

  const Graph h3 = hamming2(3);
  const VertexList cells = {0 * 3 + 0, 0 * 3 + 1, 0 * 3 + 2, 1 * 3 + 0, 1 * 3 + 1};
  CHECK(isomorphic_small(induced_subgraph(h3, cells), complement(path_graph(5))));
}

TEST_CASE("distance layers") {
  const Graph pete = petersen();
  for (int u = 0; u < pete.size(); ++u) {
    const DistanceLayers layers = distance_layers(pete, u);
    REQUIRE(layers.layers.size() == 3);
    CHECK(layers.layers[0] == std::vector<int>{u});
    CHECK(layers.layers[1].size() == 3);
    CHECK(layers.layers[2].size() == 6);
    CHECK(layers.unreachable.empty());
  }

  const Graph k5 = complete_graph(5);
  const DistanceLayers kl = distance_layers(k5, 2);
  REQUIRE(kl.layers.size() == 2);
  CHECK(kl.layers[1].size() == 4);

  const Graph two_triangles = complement(complete_multipartite(2, 3));
  const DistanceLayers tl = distance_layers(two_triangles, 0);
  REQUIRE(tl.layers.size() == 2);
  CHECK(tl.layers[1].size() == 2);
  CHECK(tl.unreachable.size() == 3);

  CHECK_THROWS_AS(distance_layers(k5, 5), InvalidVertex);
}

TEST_CASE("distance layers partition every vertex") {
  auto check_partition = [](const Graph& g, int u) {
    const DistanceLayers layers = distance_layers(g, u);
    std::size_t total = layers.unreachable.size();
    for (const auto& layer : layers.layers) {
      CHECK(!layer.empty());
      total += layer.size();
    }
    CHECK(total == static_cast<std::size_t>(g.size()));
  };
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 12);
    check_partition(g, static_cast<int>(rng() % g.size()));
  }
  for (const auto& [name, graph] : generated_catalog()) {
    CAPTURE(name);
    check_partition(graph, 0);
    check_partition(graph, graph.size() - 1);
  }
}

TEST_CASE("girth") {
  CHECK(girth(petersen()) == 5);
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(complete_multipartite(2, 3)) == 4);
  CHECK(girth(complete_graph(3)) == 3);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK_FALSE(girth(Graph()).has_value());
  CHECK_FALSE(girth(complete_graph(1)).has_value());
}

TEST_CASE("girth detects exactly the cyclic graphs") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 9);
    const bool acyclic =
        g.edge_count() == g.size() - static_cast<int>(connected_components(g).size());
    CHECK(girth(g).has_value() == !acyclic);
  }
}

TEST_CASE("small-graph isomorphism") {
  CHECK(isomorphic_small(path_graph(4), complement(path_graph(4))));
  CHECK_FALSE(isomorphic_small(path_graph(5), complement(path_graph(5))));
  CHECK(isomorphic_small(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(isomorphic_small(path_graph(3), complete_graph(3)));
  CHECK_THROWS_AS(isomorphic_small(petersen(), petersen()), TooLarge);

  // Relabelling a graph never changes its isomorphism class.
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 8);
    std::vector<int> perm(g.size());
    for (int v = 0; v < g.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    CHECK(isomorphic_small(g, Graph(g.size(), edges)));
  }
}

TEST_CASE("labels fall back to indices") {
  const Graph g(2, std::vector<Edge>{{0, 1}});
  CHECK(g.label(1) == "1");
  const Graph h(2, std::vector<Edge>{{0, 1}}, {"a", "b"});
  CHECK(h.label(1) == "b");
  CHECK(g == h);  // labels are not part of structural equality
}
