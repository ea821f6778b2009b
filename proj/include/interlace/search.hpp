#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "interlace/audit.hpp"
#include "interlace/graph.hpp"
#include "interlace/partition.hpp"

namespace interlace {

// Coarsest partition that refines the seed and is equitable for G: repeatedly
// split every block by the signature (neighbor count into each current block)
// until nothing moves. Deterministic: blocks are processed in canonical order
// and new sub-blocks are ordered by signature, lexicographically.
inline Partition equitable_refinement(const Graph& g, const Partition& seed) {
  if (seed.ground_size() != g.order())
    throw std::invalid_argument("equitable_refinement: partition does not match graph");
  const std::size_t n = g.order();

  std::vector<std::vector<std::size_t>> blocks = seed.blocks();
  for (;;) {
    // block index per vertex for this round
    std::vector<std::size_t> where(n);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t v : blocks[b]) where[v] = b;

    std::vector<std::vector<std::size_t>> next;
    bool split = false;
    for (const auto& block : blocks) {
      std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
      for (std::size_t v : block) {
        std::vector<std::size_t> sig(blocks.size(), 0);
        for (std::size_t u = 0; u < n; ++u)
          if (g.has_edge(v, u)) ++sig[where[u]];
        groups[sig].push_back(v);
      }
      split = split || groups.size() > 1;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    blocks = std::move(next);
    if (!split) break;
  }
  return Partition(n, std::move(blocks));
}

// All partitions with at most max_k blocks that are equitable for G, in
// enumeration (restricted-growth-string) order.
inline std::vector<Partition> find_equitable_partitions(const Graph& g, std::size_t max_k,
                                                        bool allow_large = false) {
  if (max_k == 0) throw std::invalid_argument("find_equitable_partitions: max_k must be positive");
  std::vector<Partition> out;
  PartitionEnumerator en(g.order(), std::nullopt, allow_large);
  while (auto p = en.next()) {
    if (p->block_count() > max_k) continue;
    if (classify_graph_partition(g, *p) == PartitionClass::equitable) out.push_back(std::move(*p));
  }
  return out;
}

struct SearchResult {
  Partition best_partition;
  double objective = 0.0;          // RHS of the chosen bound at best_partition
  std::size_t candidates_examined = 0;
  bool exhaustive = false;
};

// Exhaustively scan all k-block partitions for the best right-hand side of
// the chosen bound: largest RHS for the lower bounds (ineq4, lapl2), smallest
// for the upper bounds (ineq3, lapl1). Only the RHS is evaluated per
// candidate — the eigenvalue side does not depend on the partition. Ties keep
// the earliest candidate in enumeration order.
inline SearchResult maximize_bound(const Graph& g, std::size_t k, BoundId id,
                                   bool allow_large = false, const TolerancePolicy& policy = {}) {
  policy.validate();
  const std::size_t n = g.order();
  if (!(1 < k && k < n))
    throw std::invalid_argument("maximize_bound: need 1 < k < n");
  const bool maximize = bound_is_lower_bound(id);

  std::optional<SearchResult> best;
  PartitionEnumerator en(n, k, allow_large);
  std::size_t examined = 0;
  while (auto p = en.next()) {
    ++examined;
    const double value = bound_rhs(g, *p, id);
    const bool better =
        !best || (maximize ? value > best->objective : value < best->objective);
    if (better) best = SearchResult{std::move(*p), value, 0, true};
  }
  best->candidates_examined = examined;
  return *best;
}

}  // namespace interlace
