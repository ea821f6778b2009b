#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/tolerance.hpp"

namespace interlace {

// Full eigendecomposition of a real symmetric matrix. values are sorted
// descending; column i of vectors is a unit eigenvector for values[i], and
// the columns are mutually orthonormal.
struct Spectrum {
  std::vector<double> values;
  DenseMatrix vectors;

  std::size_t size() const { return values.size(); }

  std::vector<double> vector(std::size_t i) const {
    std::vector<double> v(vectors.rows());
    for (std::size_t r = 0; r < vectors.rows(); ++r) v[r] = vectors(r, i);
    return v;
  }
};

namespace detail {

// sqrt(2 * sum_{p<q} a_pq^2): Frobenius norm of the strictly off-diagonal part.
inline double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const double v = a[p * n + q];
      s += v * v;
    }
  return std::sqrt(2.0 * s);
}

}  // namespace detail

// Cyclic Jacobi. Deliberately self-contained: the rest of the library leans
// on reproducible eigenvalue ordering and sign conventions, which an external
// solver would not pin down.
//
// Convergence: off-diagonal Frobenius norm <= 1e-12 * ||M||_F, checked before
// each sweep; gives up after 100 sweeps (never observed past ~15 for n <= 200).
inline Spectrum symmetric_eigen(const DenseMatrix& m, const TolerancePolicy& policy = {}) {
  policy.validate();
  if (!m.square()) throw std::invalid_argument("symmetric_eigen: matrix must be square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  if (m.max_asymmetry() > policy.eigen_tol * scale)
    throw std::invalid_argument("symmetric_eigen: matrix is not symmetric within tolerance");

  // Work on a symmetrized copy so the rotations see an exactly symmetric matrix.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      a[i * n + j] = v;
      a[j * n + i] = v;
    }
  }

  // vt holds the accumulated rotations transposed: row r of vt is the
  // eigenvector candidate that pairs with diagonal entry a_rr. Row-major
  // updates keep both matrices contiguous in the inner loops.
  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  const double target = 1e-12 * m.frobenius_norm();
  constexpr int max_sweeps = 100;

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a, n) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];

        // tan of the rotation angle, smaller root; guard the quadratic
        // against overflow when the diagonal gap dwarfs the pivot.
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e153) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* rp = a.data() + p * n;
        double* rq = a.data() + q * n;
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = rp[i];
          const double xq = rq[i];
          rp[i] = c * xp - s * xq;
          rq[i] = s * xp + c * xq;
        }
        // Closed forms for the 2x2 pivot block, then mirror the two touched
        // rows into their columns to restore symmetry exactly.
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0.0;
        rq[p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          a[i * n + p] = rp[i];
          a[i * n + q] = rq[i];
        }

        double* vp = vt.data() + p * n;
        double* vq = vt.data() + q * n;
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = vp[i];
          const double xq = vq[i];
          vp[i] = c * xp - s * xq;
          vq[i] = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged && detail::off_diagonal_norm(a, n) > target)
    throw std::runtime_error("symmetric_eigen: Jacobi iteration failed to converge in 100 sweeps");

  // Stable sort keeps the Jacobi output order on ties, which makes repeated
  // runs (and therefore serialized reports) byte-identical.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  Spectrum out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = order[k];
    out.values[k] = a[r * n + r];

    // Sign convention: the first coordinate of largest magnitude is positive.
    const double* v = vt.data() + r * n;
    std::size_t arg = 0;
    double best = std::abs(v[0]);
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v[i]) > best) {
        best = std::abs(v[i]);
        arg = i;
      }
    const double flip = (v[arg] < 0.0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = flip * v[i];
  }
  return out;
}

// Symmetric embedding of a rectangular matrix: indices [0, m) are rows of A,
// indices [m, m+n) are columns, with B[i][m+j] = B[m+j][i] = A[i][j]. Its
// spectrum is {±sigma_i(A)} padded with zeros.
inline DenseMatrix hermitian_embedding(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  DenseMatrix b(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b(i, m + j) = a(i, j);
      b(m + j, i) = a(i, j);
    }
  return b;
}

// Singular values, descending, via the symmetric embedding (never via the
// normal equations A^T A, which squares the condition number). Returns
// min(rows, cols) values, clamped at zero.
inline std::vector<double> singular_values(const DenseMatrix& a, const TolerancePolicy& policy = {}) {
  const Spectrum s = symmetric_eigen(hermitian_embedding(a), policy);
  const std::size_t k = std::min(a.rows(), a.cols());
  std::vector<double> sigma(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(k));
  const double slack = policy.equality_scale(a.max_abs());
  for (double& v : sigma) {
    if (v < -slack)
      throw std::runtime_error("singular_values: embedding produced a negative leading eigenvalue");
    v = std::max(v, 0.0);
  }
  return sigma;
}

// Strong connectivity of the support digraph {(i,j) : m_ij > 0}. Defined for
// square nonnegative matrices only; for symmetric input this is ordinary
// connectivity.
inline bool is_irreducible(const DenseMatrix& m) {
  if (!m.square()) throw std::invalid_argument("is_irreducible: matrix must be square");
  if (!m.is_nonnegative())
    throw std::invalid_argument("is_irreducible: matrix must be nonnegative");
  const std::size_t n = m.rows();
  if (n == 1) return true;

  const auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        const double w = forward ? m(u, v) : m(v, u);
        if (w > 0.0 && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

}  // namespace interlace
