#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

/// Undirected simple graph on vertices {0..n-1}. Adjacency is stored as n
/// bitset rows, so neighbour lookup is O(1) and row iteration is O(n/64)
/// words. Instances are immutable once built; construct through the factory
/// functions below or Graph::from_edges.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in [1, " +
                                  std::to_string(kMaxOrder) + "], got " +
                                  std::to_string(n));
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.insert(a, b);
    return g;
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return (row(a)[b >> 6] >> (b & 63)) & 1u;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
  }

  // Edges as (a, b) with a < b, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if ((row(a)[b >> 6] >> (b & 63)) & 1u) out.emplace_back(a, b);
    return out;
  }

  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }
  int row_words() const { return words_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  friend Graph add_edge(const Graph&, int, int);

  void insert(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("self-loop rejected");
    if (adjacent(a, b)) throw std::invalid_argument("duplicate edge rejected");
    mut_row(a)[b >> 6] |= std::uint64_t{1} << (b & 63);
    mut_row(b)[a >> 6] |= std::uint64_t{1} << (a & 63);
    ++m_;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(n_) + ")");
  }

  std::uint64_t* mut_row(int v) {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_;
  int words_;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Degrees sorted non-increasing.
struct DegreeSequence {
  std::vector<int> degrees;

  int d1() const { return degrees.at(0); }
  int d2() const {
    if (degrees.size() < 2) throw state_error("d2 needs at least 2 vertices");
    return degrees[1];
  }
  // Sum of the k largest degrees.
  long long top_sum(int k) const {
    if (k < 1 || k > static_cast<int>(degrees.size()))
      throw std::invalid_argument("degree top_sum: k out of range");
    return std::accumulate(degrees.begin(), degrees.begin() + k, 0LL);
  }
};

inline DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) ds.degrees.push_back(g.degree(v));
  std::sort(ds.degrees.begin(), ds.degrees.end(), std::greater<>());
  return ds;
}

/// Pendant/middle counts for the two-hub families: hubs u, v share p middle
/// vertices; u carries r pendants and v carries s pendants (n = p+r+s+2).
struct FamilyParams {
  int p = 0;
  int r = 0;
  int s = 0;

  int n() const { return p + r + s + 2; }
  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(r) + "," +
           std::to_string(s) + ")";
  }
};

// ---- named constructions ----

inline Graph make_star(int n) {
  if (n < 2) throw std::invalid_argument("make_star: n must be >= 2");
  Graph g(n);
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph make_complete_bipartite(int n1, int n2) {
  if (n2 < 1 || n1 < n2)
    throw std::invalid_argument("make_complete_bipartite: need n1 >= n2 >= 1");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) e.emplace_back(a, n1 + b);
  return Graph::from_edges(n1 + n2, e);
}

// Star S_n plus one edge between two leaves; n=3 would duplicate an edge of
// K_3, hence the n >= 4 floor.
inline Graph make_star_plus_edge(int n) {
  if (n < 4) throw std::invalid_argument("make_star_plus_edge: n must be >= 4");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  e.emplace_back(1, 2);
  return Graph::from_edges(n, e);
}

// Vertex layout fixed so the quotient block structure is reproducible:
// u=0, v=1, middles 2..p+1, u-pendants p+2..p+r+1, v-pendants last.
inline Graph make_H(const FamilyParams& fp, bool allow_disconnected = false) {
  if (fp.p < 0 || fp.r < 0 || fp.s < 0)
    throw std::invalid_argument("make_H: negative family parameter");
  if (fp.p == 0 && !allow_disconnected)
    throw hypothesis_error("make_H: p=0 yields a disconnected graph (u,v not adjacent)");
  const int n = fp.n();
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < fp.p; ++i) {
    e.emplace_back(0, 2 + i);
    e.emplace_back(1, 2 + i);
  }
  for (int i = 0; i < fp.r; ++i) e.emplace_back(0, 2 + fp.p + i);
  for (int i = 0; i < fp.s; ++i) e.emplace_back(1, 2 + fp.p + fp.r + i);
  return Graph::from_edges(n, e);
}

inline Graph make_G(const FamilyParams& fp) {
  if (fp.p < 0 || fp.r < 0 || fp.s < 0)
    throw std::invalid_argument("make_G: negative family parameter");
  if (fp.p + fp.r + fp.s < 1)
    throw std::invalid_argument("make_G: p+r+s must be >= 1");
  Graph h = make_H(fp, /*allow_disconnected=*/true);
  auto e = h.edges();
  e.emplace_back(0, 1);
  return Graph::from_edges(h.order(), e);
}

// ---- basic queries ----

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  const int w = g.row_words();
  std::vector<std::uint64_t> seen(w, 0), frontier(w, 0);
  seen[0] = frontier[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> next(w, 0);
    for (int v = 0; v < n; ++v)
      if ((frontier[v >> 6] >> (v & 63)) & 1u)
        for (int i = 0; i < w; ++i) next[i] |= g.row(v)[i];
    for (int i = 0; i < w; ++i) {
      const std::uint64_t fresh = next[i] & ~seen[i];
      if (fresh) grew = true;
      seen[i] |= fresh;
      frontier[i] = fresh;
    }
  }
  int reached = 0;
  for (int i = 0; i < w; ++i) reached += std::popcount(seen[i]);
  return reached == n;
}

inline bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (!((g.row(v)[u >> 6] >> (u & 63)) & 1u)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Returns a copy with the extra edge; the original is untouched.
inline Graph add_edge(const Graph& g, int a, int b) {
  Graph out = g;
  out.insert(a, b);
  return out;
}

}  // namespace specbound
