#pragma once

// Shared test utilities: random instance generators with fixed seeds and
// independent oracles (power iteration) used to cross-check the Jacobi
// solver. Test-only; not part of the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/partition.hpp"

namespace testutil {

inline interlace::DenseMatrix random_symmetric(std::size_t n, std::mt19937& rng, double lo = -1.0,
                                               double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  interlace::DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = dist(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

inline interlace::DenseMatrix random_rectangular(std::size_t rows, std::size_t cols,
                                                 std::mt19937& rng, double lo = -1.0,
                                                 double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  interlace::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline interlace::Graph random_graph(std::size_t n, double edge_prob, std::mt19937& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<interlace::Graph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return interlace::Graph(n, std::move(edges));
}

// Every labeled graph on n vertices, edge sets in binary-counter order.
// 2^(n(n-1)/2) graphs; keep n tiny.
inline std::vector<interlace::Graph> all_graphs(std::size_t n) {
  std::vector<interlace::Graph::Edge> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<interlace::Graph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<interlace::Graph::Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask & (std::size_t{1} << b)) edges.push_back(slots[b]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

// Uniformly labeled partition with exactly k nonempty blocks.
inline interlace::Partition random_partition(std::size_t n, std::size_t k, std::mt19937& rng) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < k; ++i) labels[i] = i;  // pin every block nonempty
  std::uniform_int_distribution<std::size_t> lab(0, k - 1);
  for (std::size_t i = k; i < n; ++i) labels[i] = lab(rng);
  std::shuffle(labels.begin(), labels.end(), rng);
  return interlace::Partition::from_assignment(labels);
}

// Independent largest-eigenvalue oracle: power iteration on M + cI with c
// large enough to make the top eigenvalue of M the dominant one in modulus.
// Assumes that eigenvalue is simple (true for the connected-graph cases this
// cross-checks).
inline double power_iteration_mu1(const interlace::DenseMatrix& m, int iterations = 3000) {
  const std::size_t n = m.rows();
  double row_sum_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(m(i, j));
    row_sum_max = std::max(row_sum_max, s);
  }
  const double shift = row_sum_max + 1.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> y = m.apply(x);
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  const std::vector<double> mx = m.apply(x);
  double rayleigh = 0.0;
  for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * mx[i];
  return rayleigh;
}

inline double residual_fro(const interlace::DenseMatrix& m, const interlace::Spectrum& s) {
  const std::size_t n = m.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double recon = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        recon += s.vectors(i, k) * s.values[k] * s.vectors(j, k);
      const double d = recon - m(i, j);
      sum += d * d;
    }
  return std::sqrt(sum);
}

// max |(V^T V - I)_ij|
inline double orthonormality_defect(const interlace::Spectrum& s) {
  const std::size_t n = s.vectors.rows();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += s.vectors(i, a) * s.vectors(i, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace testutil
