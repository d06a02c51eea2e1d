#include "srgpaths/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace srgpaths {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 0 || n > kMaxVertices)
    throw TooLarge("graph order " + std::to_string(n) + " outside [0, " +
                   std::to_string(kMaxVertices) + "]");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error("label list has length " + std::to_string(labels.size()) +
                ", expected " + std::to_string(n));
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  labels_ = std::move(labels);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidVertex("edge endpoint out of range: (" + std::to_string(u) +
                          "," + std::to_string(v) + ")");
    if (u == v) throw InvalidVertex("loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  }
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw InvalidVertex("vertex " + std::to_string(u) + " out of range for order " +
                        std::to_string(n_));
}

int Graph::degree(int u) const {
  check_vertex(u);
  const std::uint64_t* r = row(u);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bitsleft = r[w];
    while (bitsleft) {
      out.push_back(w * 64 + std::countr_zero(bitsleft));
      bitsleft &= bitsleft - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(int v) const {
  check_vertex(v);
  if (has_labels()) return labels_[v];
  return std::to_string(v);
}

Graph complement(const Graph& g) {
  const int n = g.size();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges, g.labels());
}

Graph induced_subgraph(const Graph& g, const VertexList& vs) {
  std::vector<char> seen(g.size(), 0);
  for (int v : vs) {
    g.check_vertex(v);
    if (seen[v]) throw InvalidVertex("vertex " + std::to_string(v) + " duplicated");
    seen[v] = 1;
  }
  const int k = static_cast<int>(vs.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vs[i], vs[j])) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(vs.size());
    for (int v : vs) labels.push_back(g.labels()[v]);
  }
  return Graph(k, edges, std::move(labels));
}

namespace {

// BFS distances; -1 marks unreachable. skip_u/skip_v suppress one edge.
std::vector<int> bfs_dist(const Graph& g, int source, int skip_u = -1, int skip_v = -1) {
  std::vector<int> dist(g.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceLayers distance_layers(const Graph& g, int source) {
  g.check_vertex(source);
  std::vector<int> dist = bfs_dist(g, source);
  int maxd = 0;
  for (int d : dist) maxd = std::max(maxd, d);
  DistanceLayers out;
  out.source = source;
  out.layers.resize(maxd + 1);
  for (int v = 0; v < g.size(); ++v) {
    if (dist[v] < 0)
      out.unreachable.push_back(v);
    else
      out.layers[dist[v]].push_back(v);
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  // Triangles first: word-parallel common-neighbour test per edge.
  const int n = g.size();
  bool any_edge = false;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      any_edge = true;
      if (common_neighbor_count(g, u, v) > 0) return 3;
    }
  }
  if (!any_edge) return std::nullopt;
  // Shortest cycle through each edge: distance in G minus that edge, plus one.
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      std::vector<int> dist = bfs_dist(g, u, u, v);
      if (dist[v] < 0) continue;
      int len = dist[v] + 1;
      if (!best || len < *best) best = len;
      if (best && *best == 4) return best;  // 3 already ruled out
    }
  }
  return best;
}

namespace {

bool iso_extend(const Graph& g, const Graph& h, std::vector<int>& map,
                std::vector<char>& used, int depth) {
  const int n = g.size();
  if (depth == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int i = 0; i < depth; ++i) {
      if (g.adjacent(depth, i) != h.adjacent(cand, map[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[depth] = cand;
    used[cand] = 1;
    if (iso_extend(g, h, map, used, depth + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic_small(const Graph& g, const Graph& h) {
  if (g.size() > 8 || h.size() > 8)
    throw TooLarge("isomorphic_small handles at most 8 vertices");
  if (g.size() != h.size()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.size(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(g.size(), -1);
  std::vector<char> used(g.size(), 0);
  return iso_extend(g, h, map, used, 0);
}

int common_neighbor_count(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  int c = 0;
  for (int w = 0; w < g.row_words(); ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  std::vector<int> dist = bfs_dist(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.size(), 0);
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> dist = bfs_dist(g, s);
    std::vector<int> comp;
    for (int v = 0; v < g.size(); ++v) {
      if (dist[v] >= 0) {
        seen[v] = 1;
        comp.push_back(v);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace srgpaths
