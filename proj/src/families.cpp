#include "srgpaths/families.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace srgpaths {

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Johnson2: return "johnson2";
    case FamilyKind::Kneser2: return "kneser2";
    case FamilyKind::Hamming2: return "hamming2";
    case FamilyKind::Petersen: return "petersen";
    case FamilyKind::CompleteMultipartite: return "multipartite";
    case FamilyKind::LatinSquare: return "latin";
    case FamilyKind::Mols: return "mols";
    case FamilyKind::PseudoLatin: return "pseudo-latin";
    case FamilyKind::StsBlock: return "sts-block";
  }
  return "?";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  std::string low;
  for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (FamilyKind k :
       {FamilyKind::Johnson2, FamilyKind::Kneser2, FamilyKind::Hamming2, FamilyKind::Petersen,
        FamilyKind::CompleteMultipartite, FamilyKind::LatinSquare, FamilyKind::Mols,
        FamilyKind::PseudoLatin, FamilyKind::StsBlock})
    if (low == family_name(k)) return k;
  return std::nullopt;
}

namespace {

// Compact "ij" style only when every point of the graph is a single
// digit, so one graph never mixes label styles.
std::string point_pair_label(int i, int j, bool compact) {
  if (compact) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

void require_order(bool ok, const std::string& what) {
  if (!ok) throw BadOrder(what);
}

}  // namespace

int johnson2_vertex(int m, int i, int j) {
  int idx = 0;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw InvalidVertex("pair {" + std::to_string(i) + "," + std::to_string(j) +
                      "} not a 2-subset of {1.." + std::to_string(m) + "}");
}

Graph johnson2(int m) {
  require_order(m >= 2, "johnson2 requires m >= 2");
  const long long n = static_cast<long long>(m) * (m - 1) / 2;
  require_order(n <= Graph::kMaxVertices, "johnson2 order exceeds the vertex cap");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      pairs.emplace_back(a, b);
      labels.push_back(point_pair_label(a, b, m <= 9));
    }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const auto [a, b] = pairs[u];
      const auto [c, d] = pairs[v];
      const int common = (a == c) + (a == d) + (b == c) + (b == d);
      if (common == 1) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  return Graph(static_cast<int>(n), edges, std::move(labels));
}

Graph kneser2(int m) { return complement(johnson2(m)); }

Graph hamming2(int m) {
  require_order(m >= 1, "hamming2 requires m >= 1");
  require_order(static_cast<long long>(m) * m <= Graph::kMaxVertices,
                "hamming2 order exceeds the vertex cap");
  const int n = m * m;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) labels.push_back(point_pair_label(a, b, m <= 10));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int a1 = u / m, b1 = u % m, a2 = v / m, b2 = v % m;
      if ((a1 == a2) != (b1 == b2)) edges.emplace_back(u, v);
    }
  return Graph(n, edges, std::move(labels));
}

Graph petersen() { return kneser2(5); }

Graph complete_multipartite(int parts, int part_size) {
  require_order(parts >= 1 && part_size >= 1, "multipartite requires r >= 1 and m >= 1");
  const long long n = static_cast<long long>(parts) * part_size;
  require_order(n <= Graph::kMaxVertices, "multipartite order exceeds the vertex cap");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) edges.emplace_back(u, v);
  return Graph(static_cast<int>(n), edges);
}

SrgParams expected_params(FamilyKind kind, int a, int b) {
  switch (kind) {
    case FamilyKind::Johnson2:
      require_order(a >= 4, "johnson2 parameter formula requires m >= 4");
      return SrgParams{a * (a - 1) / 2, 2 * (a - 2), a - 2, 4};
    case FamilyKind::Kneser2:
      return complement_params(expected_params(FamilyKind::Johnson2, a));
    case FamilyKind::Hamming2:
      require_order(a >= 2, "hamming2 parameter formula requires m >= 2");
      return SrgParams{a * a, 2 * (a - 1), a - 2, 2};
    case FamilyKind::Petersen:
      return SrgParams{10, 3, 0, 1};
    case FamilyKind::CompleteMultipartite: {
      require_order(a >= 1 && b >= 1, "multipartite requires r >= 1 and m >= 1");
      if (a == 1) return SrgParams{b, 0, 0, 0};  // a single part is edgeless
      if (b == 1)  // parts of size one give a complete graph, where mu is 0 by convention
        return SrgParams{a, a - 1, std::max(a - 2, 0), 0};
      return SrgParams{a * b, (a - 1) * b, (a - 2) * b, (a - 1) * b};
    }
    case FamilyKind::LatinSquare:
      return expected_params(FamilyKind::PseudoLatin, a, 1);
    case FamilyKind::Mols:
      return expected_params(FamilyKind::PseudoLatin, a, 2);
    case FamilyKind::PseudoLatin: {
      const int m = a, t = b;
      require_order(t >= 1 && m >= t + 2, "pseudo-latin requires t >= 1 and m >= t + 2");
      SrgParams p{m * m, (t + 2) * (m - 1), m - 2 + t * (t + 1), (t + 1) * (t + 2)};
      validate(p);
      return p;
    }
    case FamilyKind::StsBlock: {
      const int m = a;
      require_order(m >= 3 && (m % 6 == 1 || m % 6 == 3), "sts order must be 1 or 3 (mod 6)");
      const int blocks = m * (m - 1) / 6;
      // Below m = 9 every block pair intersects, so the graph is complete
      // and the generic formula's mu does not apply.
      if (m <= 7) return SrgParams{blocks, blocks - 1, std::max(blocks - 2, 0), 0};
      SrgParams p{blocks, 3 * (m - 3) / 2, (m + 3) / 2, 9};
      validate(p);
      return p;
    }
  }
  throw BadOrder("unknown family");
}

LatinSquare::LatinSquare(int order, std::vector<int> cells) : m_(order), cells_(std::move(cells)) {
  if (m_ < 1) throw BadOrder("latin square order must be at least 1");
  if (cells_.size() != static_cast<std::size_t>(m_) * m_)
    throw Ragged("latin square of order " + std::to_string(m_) + " needs " +
                 std::to_string(m_ * m_) + " cells, got " + std::to_string(cells_.size()));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c)
      if (at(r, c) < 0 || at(r, c) >= m_)
        throw NotLatin("cell (" + std::to_string(r) + "," + std::to_string(c) +
                       ") holds symbol " + std::to_string(at(r, c)) + " outside [0," +
                       std::to_string(m_ - 1) + "]");
  std::vector<int> seen(m_);
  for (int r = 0; r < m_; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int c = 0; c < m_; ++c) {
      const int s = at(r, c);
      if (seen[s] >= 0)
        throw NotLatin("row " + std::to_string(r) + " repeats symbol " + std::to_string(s) +
                       " at columns " + std::to_string(seen[s]) + " and " + std::to_string(c));
      seen[s] = c;
    }
  }
  for (int c = 0; c < m_; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int r = 0; r < m_; ++r) {
      const int s = at(r, c);
      if (seen[s] >= 0)
        throw NotLatin("column " + std::to_string(c) + " repeats symbol " + std::to_string(s) +
                       " at rows " + std::to_string(seen[s]) + " and " + std::to_string(r));
      seen[s] = r;
    }
  }
}

LatinSquare cyclic_latin(int m) {
  require_order(m >= 1, "cyclic_latin requires m >= 1");
  std::vector<int> cells(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cells[static_cast<std::size_t>(i) * m + j] = (i + j) % m;
  return LatinSquare(m, std::move(cells));
}

MolsPair::MolsPair(LatinSquare first, LatinSquare second)
    : first_(std::move(first)), second_(std::move(second)) {
  const int m = first_.order();
  if (second_.order() != m)
    throw NotOrthogonal("orders differ: " + std::to_string(m) + " vs " +
                        std::to_string(second_.order()));
  std::vector<char> hit(static_cast<std::size_t>(m) * m, 0);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      const int key = first_.at(r, c) * m + second_.at(r, c);
      if (hit[key])
        throw NotOrthogonal("ordered pair (" + std::to_string(first_.at(r, c)) + "," +
                            std::to_string(second_.at(r, c)) + ") occurs twice");
      hit[key] = 1;
    }
}

MolsPair orthogonal_pair(int m) {
  require_order(m >= 3 && m % 2 == 1,
                "the cyclic construction needs odd m >= 3 (2 must be invertible mod m)");
  std::vector<int> a(static_cast<std::size_t>(m) * m), b(a.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      a[static_cast<std::size_t>(i) * m + j] = (i + j) % m;
      b[static_cast<std::size_t>(i) * m + j] = (2 * i + j) % m;
    }
  return MolsPair(LatinSquare(m, std::move(a)), LatinSquare(m, std::move(b)));
}

Graph latin_square_graph(const LatinSquare& square) {
  const int m = square.order();
  require_order(static_cast<long long>(m) * m <= Graph::kMaxVertices,
                "latin square graph exceeds the vertex cap");
  const int n = m * m;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) +
                       "):" + std::to_string(square.at(r, c)));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int r1 = u / m, c1 = u % m, r2 = v / m, c2 = v % m;
      if (r1 == r2 || c1 == c2 || square.at(r1, c1) == square.at(r2, c2))
        edges.emplace_back(u, v);
    }
  return Graph(n, edges, std::move(labels));
}

Graph mols_graph(const MolsPair& pair) {
  const int m = pair.order();
  require_order(static_cast<long long>(m) * m <= Graph::kMaxVertices,
                "mols graph exceeds the vertex cap");
  const int n = m * m;
  const LatinSquare& a = pair.first();
  const LatinSquare& b = pair.second();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + "):" +
                       std::to_string(a.at(r, c)) + "," + std::to_string(b.at(r, c)));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int r1 = u / m, c1 = u % m, r2 = v / m, c2 = v % m;
      if (r1 == r2 || c1 == c2 || a.at(r1, c1) == a.at(r2, c2) || b.at(r1, c1) == b.at(r2, c2))
        edges.emplace_back(u, v);
    }
  return Graph(n, edges, std::move(labels));
}

SteinerTripleSystem::SteinerTripleSystem(int points, std::vector<Block> blocks)
    : m_(points), blocks_(std::move(blocks)) {
  if (m_ < 1 || (m_ % 6 != 1 && m_ % 6 != 3))
    throw NotSts("no Steiner triple system exists on " + std::to_string(m_) +
                 " points (need 1 or 3 mod 6)");
  const std::size_t expected = static_cast<std::size_t>(m_) * (m_ - 1) / 6;
  if (blocks_.size() != expected)
    throw NotSts("expected " + std::to_string(expected) + " blocks, got " +
                 std::to_string(blocks_.size()));
  for (Block& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (b[0] < 1 || b[2] > m_)
      throw NotSts("block {" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                   std::to_string(b[2]) + "} leaves the point range 1.." + std::to_string(m_));
    if (b[0] == b[1] || b[1] == b[2])
      throw NotSts("block {" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                   std::to_string(b[2]) + "} repeats a point");
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::vector<char> covered(static_cast<std::size_t>(m_ + 1) * (m_ + 1), 0);
  for (const Block& b : blocks_) {
    const int pr[3][2] = {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
    for (const auto& p : pr) {
      char& slot = covered[static_cast<std::size_t>(p[0]) * (m_ + 1) + p[1]];
      if (slot)
        throw NotSts("pair {" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                     "} covered twice");
      slot = 1;
    }
  }
  for (int x = 1; x <= m_; ++x)
    for (int y = x + 1; y <= m_; ++y)
      if (!covered[static_cast<std::size_t>(x) * (m_ + 1) + y])
        throw NotSts("pair {" + std::to_string(x) + "," + std::to_string(y) + "} uncovered");
}

std::optional<int> SteinerTripleSystem::block_index(const Block& b) const {
  Block key = b;
  std::sort(key.begin(), key.end());
  const auto it = std::lower_bound(blocks_.begin(), blocks_.end(), key);
  if (it != blocks_.end() && *it == key)
    return static_cast<int>(it - blocks_.begin());
  return std::nullopt;
}

SteinerTripleSystem bose_sts(int m) {
  require_order(m >= 3 && m % 6 == 3, "bose construction needs m = 3 (mod 6)");
  require_order(static_cast<long long>(m) * (m - 1) / 6 <= Graph::kMaxVertices,
                "block count exceeds the vertex cap");
  const int s = m / 3;  // odd
  const int half = (s + 1) / 2;  // inverse of 2 mod s
  auto pt = [s](int x, int grp) { return 1 + x + grp * s; };
  std::vector<Block> blocks;
  for (int x = 0; x < s; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int grp = 0; grp < 3; ++grp)
    for (int x = 0; x < s; ++x)
      for (int y = x + 1; y < s; ++y)
        blocks.push_back({pt(x, grp), pt(y, grp), pt((x + y) * half % s, (grp + 1) % 3)});
  return SteinerTripleSystem(m, std::move(blocks));
}

SteinerTripleSystem skolem_sts(int m) {
  require_order(m >= 7 && m % 6 == 1, "skolem construction needs m = 1 (mod 6), m >= 7");
  require_order(static_cast<long long>(m) * (m - 1) / 6 <= Graph::kMaxVertices,
                "block count exceeds the vertex cap");
  const int t = (m - 1) / 6;
  const int q = 2 * t;
  // Half-idempotent commutative quasigroup on Z_q: relabel the cyclic
  // table so that i*i = i for i < t.
  auto op = [t, q](int x, int y) {
    const int s = (x + y) % q;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  auto pt = [q](int x, int grp) { return 1 + x + grp * q; };
  const int infinity = m;
  std::vector<Block> blocks;
  for (int i = 0; i < t; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
  for (int i = 0; i < t; ++i) {
    blocks.push_back({infinity, pt(t + i, 0), pt(i, 1)});
    blocks.push_back({infinity, pt(t + i, 1), pt(i, 2)});
    blocks.push_back({infinity, pt(t + i, 2), pt(i, 0)});
  }
  for (int grp = 0; grp < 3; ++grp)
    for (int x = 0; x < q; ++x)
      for (int y = x + 1; y < q; ++y)
        blocks.push_back({pt(x, grp), pt(y, grp), pt(op(x, y), (grp + 1) % 3)});
  return SteinerTripleSystem(m, std::move(blocks));
}

SteinerTripleSystem sts13(int index) {
  static const std::vector<Block> first = {
      {1, 2, 3},  {1, 4, 5},  {1, 6, 11},  {1, 7, 8},   {1, 9, 10},  {1, 12, 13}, {2, 4, 8},
      {2, 5, 7},  {2, 6, 10}, {2, 9, 12},  {2, 11, 13}, {3, 4, 11},  {3, 5, 10},  {3, 6, 12},
      {3, 7, 9},  {3, 8, 13}, {4, 6, 7},   {4, 9, 13},  {4, 10, 12}, {5, 6, 13},  {5, 8, 12},
      {5, 9, 11}, {6, 8, 9},  {7, 10, 13}, {7, 11, 12}, {8, 10, 11}};
  static const std::vector<Block> second = {
      {1, 2, 3},  {1, 4, 5},  {1, 6, 11},  {1, 7, 8},   {1, 9, 10},  {1, 12, 13}, {2, 4, 8},
      {2, 5, 9},  {2, 6, 10}, {2, 7, 13},  {2, 11, 12}, {3, 4, 11},  {3, 5, 10},  {3, 6, 12},
      {3, 7, 9},  {3, 8, 13}, {4, 6, 7},   {4, 9, 12},  {4, 10, 13}, {5, 6, 13},  {5, 7, 11},
      {5, 8, 12}, {6, 8, 9},  {7, 10, 12}, {8, 10, 11}, {9, 11, 13}};
  if (index == 1) return SteinerTripleSystem(13, first);
  if (index == 2) return SteinerTripleSystem(13, second);
  throw BadIndex("there are exactly two Steiner triple systems of order 13; index must be 1 or 2");
}

Graph sts_block_graph(const SteinerTripleSystem& system) {
  const auto& blocks = system.blocks();
  const int n = static_cast<int>(blocks.size());
  std::vector<std::string> labels;
  labels.reserve(blocks.size());
  for (const Block& b : blocks)
    labels.push_back(std::to_string(b[0]) + " " + std::to_string(b[1]) + " " +
                     std::to_string(b[2]));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Block& a = blocks[u];
      const Block& b = blocks[v];
      bool meet = false;
      for (int x : a)
        for (int y : b)
          if (x == y) meet = true;
      if (meet) edges.emplace_back(u, v);
    }
  return Graph(n, edges, std::move(labels));
}

}  // namespace srgpaths
