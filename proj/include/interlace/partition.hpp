#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/tolerance.hpp"

namespace interlace {

// Partition of {0, ..., ground_size-1} into nonempty blocks. Canonical form:
// elements ascending within each block, blocks ordered by smallest element.
// The constructor canonicalizes, so two partitions are equal iff their block
// structures agree regardless of input order.
class Partition {
 public:
  Partition(std::size_t ground_size, std::vector<std::vector<std::size_t>> blocks)
      : n_(ground_size), blocks_(std::move(blocks)) {
    if (n_ == 0) throw std::invalid_argument("Partition: ground set must be nonempty");
    if (blocks_.empty()) throw std::invalid_argument("Partition: needs at least one block");
    assignment_.assign(n_, npos);
    for (auto& block : blocks_) {
      if (block.empty()) throw std::invalid_argument("Partition: empty block");
      std::sort(block.begin(), block.end());
      for (std::size_t v : block) {
        if (v >= n_) throw std::invalid_argument("Partition: element out of range");
        if (assignment_[v] != npos)
          throw std::invalid_argument("Partition: element " + std::to_string(v + 1) +
                                      " appears in more than one block");
        assignment_[v] = 0;  // provisional; real indices assigned after sorting blocks
      }
    }
    for (std::size_t v = 0; v < n_; ++v)
      if (assignment_[v] == npos)
        throw std::invalid_argument("Partition: element " + std::to_string(v + 1) +
                                    " is not covered by any block");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t v : blocks_[b]) assignment_[v] = b;
  }

  static Partition single_block(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return Partition(n, {std::move(all)});
  }

  static Partition singletons(std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
    return Partition(n, std::move(blocks));
  }

  // Blocks from an arbitrary labeling (label values are irrelevant, only the
  // induced equivalence matters).
  static Partition from_assignment(std::span<const std::size_t> labels) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::optional<std::size_t>> index;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const std::size_t lab = labels[v];
      if (lab >= index.size()) index.resize(lab + 1);
      if (!index[lab]) {
        index[lab] = blocks.size();
        blocks.emplace_back();
      }
      blocks[*index[lab]].push_back(v);
    }
    return Partition(labels.size(), std::move(blocks));
  }

  // Blocks of the given sizes over consecutive indices: {0..s0-1}, {s0..}, ...
  static Partition consecutive(std::span<const std::size_t> sizes) {
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t next = 0;
    for (std::size_t s : sizes) {
      if (s == 0) throw std::invalid_argument("Partition::consecutive: zero block size");
      std::vector<std::size_t> block(s);
      for (std::size_t i = 0; i < s; ++i) block[i] = next++;
      blocks.push_back(std::move(block));
    }
    return Partition(next, std::move(blocks));
  }

  std::size_t ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(std::size_t v) const { return assignment_.at(v); }

  bool operator==(const Partition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t n_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> assignment_;
};

// Row partition x column partition, the index pair grid a rectangular matrix
// is cut along. For square matrices audited against a single partition, use
// the same Partition on both sides.
struct ProductPartition {
  Partition rows;
  Partition cols;
};

namespace detail {

inline void check_index_set(std::span<const std::size_t> idx, std::size_t limit, const char* side) {
  if (idx.empty())
    throw std::invalid_argument(std::string("block_is_regular: empty ") + side + " index set");
  std::vector<char> seen(limit, 0);
  for (std::size_t v : idx) {
    if (v >= limit)
      throw std::invalid_argument(std::string("block_is_regular: ") + side + " index out of range");
    if (seen[v])
      throw std::invalid_argument(std::string("block_is_regular: duplicate ") + side + " index");
    seen[v] = 1;
  }
}

}  // namespace detail

// True iff the submatrix A[I, J] has equal row sums and equal column sums.
// Integral blocks are compared exactly; otherwise sums must agree within
// eq_tol relative to the block's largest entry.
inline bool block_is_regular(const DenseMatrix& a, std::span<const std::size_t> row_idx,
                             std::span<const std::size_t> col_idx,
                             const TolerancePolicy& policy = {}) {
  policy.validate();
  detail::check_index_set(row_idx, a.rows(), "row");
  detail::check_index_set(col_idx, a.cols(), "column");

  bool integral = true;
  double block_max = 0.0;
  std::vector<double> row_sums(row_idx.size(), 0.0);
  std::vector<double> col_sums(col_idx.size(), 0.0);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      const double v = a(row_idx[i], col_idx[j]);
      integral = integral && v == std::nearbyint(v);
      block_max = std::max(block_max, std::abs(v));
      row_sums[i] += v;
      col_sums[j] += v;
    }

  const auto all_equal = [&](const std::vector<double>& sums) {
    if (integral) {
      for (double s : sums)
        if (s != sums.front()) return false;
      return true;
    }
    const double slack = policy.equality_scale(block_max);
    for (double s : sums)
      if (std::abs(s - sums.front()) > slack) return false;
    return true;
  };
  return all_equal(row_sums) && all_equal(col_sums);
}

// Equitable product partition: every block A[P_p, Q_q] is regular.
inline bool is_equitable_for_matrix(const DenseMatrix& a, const ProductPartition& pp,
                                    const TolerancePolicy& policy = {}) {
  if (pp.rows.ground_size() != a.rows() || pp.cols.ground_size() != a.cols())
    throw std::invalid_argument("is_equitable_for_matrix: partition sizes do not match matrix");
  for (const auto& p : pp.rows.blocks())
    for (const auto& q : pp.cols.blocks())
      if (!block_is_regular(a, p, q, policy)) return false;
  return true;
}

inline bool is_equitable_for_matrix(const DenseMatrix& a, const Partition& p,
                                    const TolerancePolicy& policy = {}) {
  return is_equitable_for_matrix(a, ProductPartition{p, p}, policy);
}

// Enumeration is capped: Bell(n) explodes, and everything in this library
// that sweeps partitions is meant for small n. Pass allow_large to override.
inline constexpr std::size_t kPartitionEnumerationCap = 10;

// Streams all partitions of {0..n-1} in restricted-growth-string order
// (lexicographic on the label sequence), optionally filtered to an exact
// block count. RGS order puts the single block first and singletons last,
// and every emitted partition is already in canonical form.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::size_t n, std::optional<std::size_t> block_count = {},
                               bool allow_large = false)
      : n_(n), block_count_(block_count) {
    if (n == 0) throw std::invalid_argument("PartitionEnumerator: n must be positive");
    if (n > kPartitionEnumerationCap && !allow_large)
      throw std::invalid_argument(
          "PartitionEnumerator: n exceeds enumeration cap " +
          std::to_string(kPartitionEnumerationCap) + " (pass allow_large to override)");
    if (block_count_ && (*block_count_ == 0 || *block_count_ > n))
      throw std::invalid_argument("PartitionEnumerator: block count out of range");
    labels_.assign(n, 0);
    prefix_max_.assign(n, 0);
  }

  std::optional<Partition> next() {
    while (!done_) {
      const std::size_t blocks = prefix_max_[n_ - 1] + 1;
      if (!block_count_ || blocks == *block_count_) {
        Partition out = Partition::from_assignment(labels_);
        advance();
        return out;
      }
      advance();
    }
    return std::nullopt;
  }

 private:
  void advance() {
    // Standard RGS successor: bump the rightmost label that may grow,
    // zero everything after it.
    for (std::size_t i = n_; i-- > 1;) {
      if (labels_[i] <= prefix_max_[i - 1]) {
        ++labels_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
          labels_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        return;
      }
    }
    done_ = true;
  }

  std::size_t n_;
  std::optional<std::size_t> block_count_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;
  bool done_ = false;
};

inline std::vector<Partition> enumerate_partitions(std::size_t n,
                                                   std::optional<std::size_t> block_count = {},
                                                   bool allow_large = false) {
  PartitionEnumerator en(n, block_count, allow_large);
  std::vector<Partition> out;
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace interlace
