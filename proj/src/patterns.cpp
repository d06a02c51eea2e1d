#include "srgpaths/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace srgpaths {

namespace {

Graph make_model(PatternKind kind) {
  using E = Edge;
  switch (kind) {
    case PatternKind::P3:
      return path_graph(3);
    case PatternKind::P4:
      return path_graph(4);
    case PatternKind::P5:
      return path_graph(5);
    case PatternKind::CoP5:
      return complement(path_graph(5));
    case PatternKind::C5:
      return cycle_graph(5);
    case PatternKind::Gem: {
      std::vector<E> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
      return Graph(5, edges);
    }
    case PatternKind::CoGem: {
      std::vector<E> e = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
      return complement(Graph(5, e));
    }
  }
  throw Error("unknown pattern");
}

}  // namespace

const Graph& pattern_model(PatternKind kind) {
  static const std::array<Graph, 7> models = {
      make_model(PatternKind::P3),   make_model(PatternKind::P4),
      make_model(PatternKind::P5),   make_model(PatternKind::CoP5),
      make_model(PatternKind::C5),   make_model(PatternKind::Gem),
      make_model(PatternKind::CoGem)};
  return models[static_cast<int>(kind)];
}

std::string_view pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::P3: return "P3";
    case PatternKind::P4: return "P4";
    case PatternKind::P5: return "P5";
    case PatternKind::CoP5: return "COP5";
    case PatternKind::C5: return "C5";
    case PatternKind::Gem: return "GEM";
    case PatternKind::CoGem: return "COGEM";
  }
  return "?";
}

std::optional<PatternKind> pattern_from_name(std::string_view name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (PatternKind k : kAllPatterns)
    if (up == pattern_name(k)) return k;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// Partial embedding of the chosen vertex prefix into the pattern:
// at[i] = pattern vertex assigned to the i-th chosen graph vertex.
struct PartialMap {
  std::array<std::int8_t, 5> at;
};

struct Searcher {
  const Graph& g;
  int k = 0;
  std::array<std::uint8_t, 5> pat_adj{};  // pattern adjacency bitmask rows
  std::array<int, 5> pat_deg{};
  std::vector<int> g_deg;
  std::array<int, 5> chosen{};
  std::array<std::vector<PartialMap>, 6> maps;  // maps[t]: embeddings of t chosen vertices
  std::optional<Clock::time_point> deadline;
  unsigned tick = 0;
  bool timed_out = false;
  SearchOutcome result;

  Searcher(const Graph& graph, const Graph& model) : g(graph) {
    k = model.size();
    for (int i = 0; i < k; ++i) {
      pat_deg[i] = model.degree(i);
      for (int j = 0; j < k; ++j)
        if (model.adjacent(i, j)) pat_adj[i] |= static_cast<std::uint8_t>(1u << j);
    }
    g_deg.reserve(g.size());
    for (int v = 0; v < g.size(); ++v) g_deg.push_back(g.degree(v));
    maps[0].push_back(PartialMap{});
    for (auto& m : maps) m.reserve(128);
  }

  bool out_of_time() {
    if (!deadline || timed_out) return timed_out;
    if (++tick % 64 == 1 && Clock::now() >= *deadline) timed_out = true;
    return timed_out;
  }

  // Extend every surviving embedding by graph vertex v at position t.
  // Returns false when no embedding survives.
  bool extend(int t, int v) {
    maps[t + 1].clear();
    for (const PartialMap& pm : maps[t]) {
      std::uint8_t used = 0;
      for (int i = 0; i < t; ++i) used |= static_cast<std::uint8_t>(1u << pm.at[i]);
      for (int q = 0; q < k; ++q) {
        if (used & (1u << q)) continue;
        if (g_deg[v] < pat_deg[q]) continue;
        bool ok = true;
        for (int i = 0; i < t; ++i) {
          const bool want = (pat_adj[q] >> pm.at[i]) & 1u;
          if (want != g.adjacent(v, chosen[i])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        PartialMap ext = pm;
        ext.at[t] = static_cast<std::int8_t>(q);
        maps[t + 1].push_back(ext);
      }
    }
    return !maps[t + 1].empty();
  }

  // Subsets are explored in lexicographic order, so the first full match
  // uses the least inducing subset; ties between embeddings of that subset
  // are broken by the least witness sequence in pattern order.
  bool dfs(int t, int first) {
    if (t == k) {
      VertexList best;
      for (const PartialMap& pm : maps[k]) {
        VertexList w(k);
        for (int i = 0; i < k; ++i) w[pm.at[i]] = chosen[i];
        if (best.empty() || w < best) best = w;
      }
      result.found = true;
      result.witness = std::move(best);
      return true;
    }
    for (int v = first; v <= g.size() - (k - t); ++v) {
      if (out_of_time()) return false;
      chosen[t] = v;
      if (!extend(t, v)) continue;
      if (dfs(t + 1, v + 1)) return true;
    }
    return false;
  }
};

SearchOutcome run_search(const Graph& g, PatternKind pattern,
                         std::optional<Clock::time_point> deadline, bool& timed_out) {
  Searcher s(g, pattern_model(pattern));
  s.deadline = deadline;
  if (g.size() >= s.k) s.dfs(0, 0);
  timed_out = s.timed_out;
  return s.result;
}

}  // namespace

SearchOutcome find_induced(const Graph& g, PatternKind pattern) {
  bool timed_out = false;
  return run_search(g, pattern, std::nullopt, timed_out);
}

std::optional<SearchOutcome> find_induced_within(const Graph& g, PatternKind pattern,
                                                 std::chrono::nanoseconds budget) {
  bool timed_out = false;
  SearchOutcome out = run_search(g, pattern, Clock::now() + budget, timed_out);
  if (timed_out) return std::nullopt;
  return out;
}

bool is_cograph(const Graph& g) {
  if (g.size() <= 1) return true;
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps)
      if (!is_cograph(induced_subgraph(g, comp))) return false;
    return true;
  }
  const Graph co = complement(g);
  const auto co_comps = connected_components(co);
  if (co_comps.size() < 2) return false;
  for (const auto& comp : co_comps)
    if (!is_cograph(induced_subgraph(co, comp))) return false;
  return true;
}

}  // namespace srgpaths
