#include "srgpaths/srg.hpp"

namespace srgpaths {

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

void validate(const SrgParams& p) {
  auto fail = [&](const std::string& why) {
    throw InfeasibleResult("infeasible parameters " + to_string(p) + ": " + why);
  };
  if (p.n < 1) fail("n < 1");
  if (p.k < 0 || p.k >= p.n) fail("k outside [0, n)");
  if (p.lambda < 0 || p.lambda > p.k) fail("lambda outside [0, k]");
  if (p.mu < 0 || p.mu > p.k) fail("mu outside [0, k]");
  // Counting identity: both sides count edges between G1(u) and G2(u).
  if (p.k < p.n - 1) {
    long long lhs = static_cast<long long>(p.k) * (p.k - p.lambda - 1);
    long long rhs = static_cast<long long>(p.n - p.k - 1) * p.mu;
    if (lhs != rhs) fail("k(k-lambda-1) != (n-k-1)mu");
  }
}

std::optional<SrgParams> srg_params(const Graph& g) {
  const int n = g.size();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = common_neighbor_count(g, u, v);
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0)
        slot = c;
      else if (slot != c)
        return std::nullopt;
    }
  }
  SrgParams p{n, k, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
  validate(p);
  return p;
}

SrgParams complement_params(const SrgParams& p) {
  validate(p);
  SrgParams out{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
  if (out.k < 0 || out.lambda < 0 || out.mu < 0)
    throw InfeasibleResult("complement of " + to_string(p) +
                           " has a negative component: " + to_string(out));
  validate(out);
  return out;
}

bool is_primitive(const Graph& g) {
  if (!srg_params(g))
    throw NotSrg("is_primitive requires a strongly regular graph");
  if (g.size() < 2) return false;
  return is_connected(g) && is_connected(complement(g));
}

std::optional<MultipartiteShape> multipartite_decomposition(const Graph& g) {
  if (g.size() < 2) return std::nullopt;
  const Graph co = complement(g);
  const auto comps = connected_components(co);
  const int r = static_cast<int>(comps.size());
  if (r < 2) return std::nullopt;
  const int m = static_cast<int>(comps[0].size());
  for (const auto& comp : comps) {
    if (static_cast<int>(comp.size()) != m) return std::nullopt;
    // Each part must be independent in g, i.e. a clique of the complement.
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!co.adjacent(comp[i], comp[j])) return std::nullopt;
  }
  return MultipartiteShape{r, m};
}

}  // namespace srgpaths
