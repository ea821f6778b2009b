#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/partition.hpp"

namespace interlace {

// Simple undirected graph on vertices 0..n-1 (1-based only at I/O
// boundaries). Stored as a sorted edge list plus per-vertex adjacency
// bitsets, so iteration order is deterministic and membership is O(1).
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // normalized u < v

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    if (n == 0) throw std::invalid_argument("Graph: vertex count must be positive");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n_ || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      if (u > v) std::swap(u, v);
      if (adj_[u][v]) throw std::invalid_argument("Graph: duplicate edge");
      adj_[u][v] = adj_[v][u] = true;
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    degrees_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
      ++degrees_[u];
      ++degrees_[v];
    }
  }

  static Graph empty(std::size_t n) { return Graph(n, {}); }

  static Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
  }

  static Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
  }

  static Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("Graph::cycle: needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
  }

  static Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < a; ++u)
      for (std::size_t v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
  }

  static Graph hypercube(std::size_t dim) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t v = u ^ (std::size_t{1} << b);
        if (u < v) e.emplace_back(u, v);
      }
    return Graph(n, std::move(e));
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).at(v); }
  std::size_t degree(std::size_t v) const { return degrees_.at(v); }

  bool is_regular() const {
    for (std::size_t d : degrees_)
      if (d != degrees_.front()) return false;
    return true;
  }

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v)
        if (adj_[u][v] && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::size_t> degrees_;
};

inline DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

inline DenseMatrix laplacian_matrix(const Graph& g) {
  DenseMatrix l(g.order(), g.order());
  for (std::size_t v = 0; v < g.order(); ++v) l(v, v) = static_cast<double>(g.degree(v));
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1.0;
    l(v, u) = -1.0;
  }
  return l;
}

namespace detail {

inline void check_vertex_set(const Graph& g, std::span<const std::size_t> xs, const char* name) {
  if (xs.empty()) throw std::invalid_argument(std::string("vertex set ") + name + " is empty");
  std::vector<char> seen(g.order(), 0);
  for (std::size_t v : xs) {
    if (v >= g.order())
      throw std::invalid_argument(std::string("vertex set ") + name + " has out-of-range vertex");
    if (seen[v])
      throw std::invalid_argument(std::string("vertex set ") + name + " has duplicate vertex");
    seen[v] = 1;
  }
}

inline void check_disjoint(std::span<const std::size_t> xs, std::span<const std::size_t> ys,
                           std::size_t n) {
  std::vector<char> seen(n, 0);
  for (std::size_t v : xs) seen[v] = 1;
  for (std::size_t v : ys)
    if (seen[v]) throw std::invalid_argument("vertex sets overlap");
}

}  // namespace detail

// e(X): edges with both ends in X.
inline std::size_t edge_count_within(const Graph& g, std::span<const std::size_t> xs) {
  detail::check_vertex_set(g, xs, "X");
  std::size_t count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (g.has_edge(xs[i], xs[j])) ++count;
  return count;
}

// e(X,Y): edges with one end in X, the other in Y (X, Y disjoint).
inline std::size_t edge_count_between(const Graph& g, std::span<const std::size_t> xs,
                                      std::span<const std::size_t> ys) {
  detail::check_vertex_set(g, xs, "X");
  detail::check_vertex_set(g, ys, "Y");
  detail::check_disjoint(xs, ys, g.order());
  std::size_t count = 0;
  for (std::size_t u : xs)
    for (std::size_t v : ys)
      if (g.has_edge(u, v)) ++count;
  return count;
}

// G[X] regular: every vertex of X has the same number of neighbors inside X.
inline bool regularity(const Graph& g, std::span<const std::size_t> xs) {
  detail::check_vertex_set(g, xs, "X");
  std::optional<std::size_t> expected;
  for (std::size_t u : xs) {
    std::size_t d = 0;
    for (std::size_t v : xs)
      if (g.has_edge(u, v)) ++d;
    if (!expected) expected = d;
    if (d != *expected) return false;
  }
  return true;
}

// G[X,Y] semiregular: constant Y-degree over X and constant X-degree over Y.
// An empty cross block counts as semiregular (everything is 0-regular).
inline bool regularity(const Graph& g, std::span<const std::size_t> xs,
                       std::span<const std::size_t> ys) {
  detail::check_vertex_set(g, xs, "X");
  detail::check_vertex_set(g, ys, "Y");
  detail::check_disjoint(xs, ys, g.order());
  const auto constant_cross_degree = [&](std::span<const std::size_t> from,
                                         std::span<const std::size_t> to) {
    std::optional<std::size_t> expected;
    for (std::size_t u : from) {
      std::size_t d = 0;
      for (std::size_t v : to)
        if (g.has_edge(u, v)) ++d;
      if (!expected) expected = d;
      if (d != *expected) return false;
    }
    return true;
  };
  return constant_cross_degree(xs, ys) && constant_cross_degree(ys, xs);
}

enum class PartitionClass { equitable, semiequitable_only, neither };

inline const char* to_string(PartitionClass c) {
  switch (c) {
    case PartitionClass::equitable: return "equitable";
    case PartitionClass::semiequitable_only: return "semiequitable";
    case PartitionClass::neither: return "neither";
  }
  return "?";
}

// Semiequitable: all cross pairs G[P_i,P_j] semiregular. Equitable: that plus
// every induced G[P_i] regular. Exact integer degree counting throughout.
inline PartitionClass classify_graph_partition(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.order())
    throw std::invalid_argument("classify_graph_partition: partition does not match graph");
  const auto& blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!regularity(g, blocks[i], blocks[j])) return PartitionClass::neither;
  for (const auto& block : blocks)
    if (!regularity(g, block)) return PartitionClass::semiequitable_only;
  return PartitionClass::equitable;
}

// Join: disjoint union of the constituents plus all edges between distinct
// constituents. Vertices are numbered by constituent, in order.
inline Graph join(std::span<const Graph> parts) {
  if (parts.size() < 2) throw std::invalid_argument("join: needs at least two graphs");
  std::size_t n = 0;
  for (const Graph& g : parts) n += g.order();
  std::vector<Graph::Edge> edges;
  std::size_t offset = 0;
  std::vector<std::size_t> offsets;
  for (const Graph& g : parts) {
    offsets.push_back(offset);
    for (const auto& [u, v] : g.edges()) edges.emplace_back(offset + u, offset + v);
    offset += g.order();
  }
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (std::size_t u = 0; u < parts[a].order(); ++u)
        for (std::size_t v = 0; v < parts[b].order(); ++v)
          edges.emplace_back(offsets[a] + u, offsets[b] + v);
  return Graph(n, std::move(edges));
}

inline Graph join(const Graph& g1, const Graph& g2) {
  const Graph parts[] = {g1, g2};
  return join(std::span<const Graph>(parts, 2));
}

// Blow-up of a template graph: vertex i of the template becomes a block of
// size sizes[i]; blocks i and j are completely joined iff {i,j} is a template
// edge, and block i induces a clique iff loops[i] (default: empty, which is
// the shape whose quotient reproduces the template exactly).
struct BlowUp {
  Graph graph;
  Partition blocks;
};

inline BlowUp blow_up(const Graph& pattern, std::span<const std::size_t> sizes,
                      const std::vector<bool>& loops = {}) {
  const std::size_t k = pattern.order();
  if (sizes.size() != k) throw std::invalid_argument("blow_up: one size per template vertex");
  if (!loops.empty() && loops.size() != k)
    throw std::invalid_argument("blow_up: one loop flag per template vertex");
  for (std::size_t s : sizes)
    if (s == 0) throw std::invalid_argument("blow_up: block sizes must be positive");

  Partition blocks = Partition::consecutive(sizes);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& bi = blocks.block(i);
    if (!loops.empty() && loops[i])
      for (std::size_t a = 0; a < bi.size(); ++a)
        for (std::size_t b = a + 1; b < bi.size(); ++b) edges.emplace_back(bi[a], bi[b]);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!pattern.has_edge(i, j)) continue;
      for (std::size_t u : bi)
        for (std::size_t v : blocks.block(j)) edges.emplace_back(u, v);
    }
  }
  return BlowUp{Graph(blocks.ground_size(), std::move(edges)), std::move(blocks)};
}

}  // namespace interlace
