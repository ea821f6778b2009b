#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/partition.hpp"

namespace interlace {

// b_pq = (1 / sqrt(|P_p| |Q_q|)) * sum of A[i][j] over i in P_p, j in Q_q.
// Carries the partitions it was built from so downstream reports are
// self-describing.
struct QuotientMatrix {
  DenseMatrix matrix;
  ProductPartition product;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;
};

namespace detail {

// Compensated (Kahan) sum of one block; up to m*n terms feed a single b_pq,
// so plain accumulation would loosen the recomputation invariant.
inline double block_sum(const DenseMatrix& a, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) {
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i : rows)
    for (std::size_t j : cols) {
      const double y = a(i, j) - carry;
      const double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
  return sum;
}

}  // namespace detail

inline QuotientMatrix quotient_matrix(const DenseMatrix& a, const ProductPartition& pp) {
  if (pp.rows.ground_size() != a.rows() || pp.cols.ground_size() != a.cols())
    throw std::invalid_argument("quotient_matrix: partition sizes do not match matrix");
  const std::size_t k = pp.rows.block_count();
  const std::size_t l = pp.cols.block_count();
  DenseMatrix b(k, l);

  // With a symmetric source and one partition on both sides, compute the
  // upper triangle and mirror it: b_pq and b_qp sum the same entries in
  // different orders, and mirroring makes the result exactly symmetric
  // instead of symmetric up to roundoff.
  const bool mirror = a.square() && pp.rows == pp.cols && a.max_asymmetry() == 0.0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < l; ++q) {
      if (mirror && q < p) {
        b(p, q) = b(q, p);
        continue;
      }
      const auto& rp = pp.rows.block(p);
      const auto& cq = pp.cols.block(q);
      const double norm = std::sqrt(static_cast<double>(rp.size()) * static_cast<double>(cq.size()));
      b(p, q) = detail::block_sum(a, rp, cq) / norm;
    }
  return QuotientMatrix{std::move(b), pp, a.rows(), a.cols()};
}

inline QuotientMatrix quotient_matrix(const DenseMatrix& a, const Partition& p) {
  return quotient_matrix(a, ProductPartition{p, p});
}

// Isometric lift from quotient space: x_i = y_s / sqrt(|P_s|) for i in P_s.
// Preserves the Euclidean norm and strict positivity.
inline std::vector<double> lift_vector(std::span<const double> y, const Partition& p) {
  if (y.size() != p.block_count())
    throw std::invalid_argument("lift_vector: need one entry per block");
  std::vector<double> x(p.ground_size());
  for (std::size_t s = 0; s < p.block_count(); ++s) {
    const double v = y[s] / std::sqrt(static_cast<double>(p.block(s).size()));
    for (std::size_t i : p.block(s)) x[i] = v;
  }
  return x;
}

}  // namespace interlace
