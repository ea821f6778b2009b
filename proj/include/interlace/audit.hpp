#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interlace/dense_matrix.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/partition.hpp"
#include "interlace/quotient.hpp"
#include "interlace/tolerance.hpp"

namespace interlace {

// The four eigenvalue bounds tied to a vertex partition P_1,...,P_k:
//   ineq4: mu_1 + ... + mu_k             >= sum_i 2e(P_i)/|P_i|
//   ineq3: mu_{n-k+2} + ... + mu_n       <= sum_i 2e(P_i)/|P_i| - 2e(G)/n
//   lapl1: la_2 + ... + la_k             <= sum_{i<j} e(P_i,P_j)(1/|P_i|+1/|P_j|)
//   lapl2: la_{n-k+1} + ... + la_n       >= sum_{i<j} e(P_i,P_j)(1/|P_i|+1/|P_j|)
// (mu = adjacency eigenvalues descending, la = Laplacian eigenvalues ascending.)
enum class BoundId { ineq4, ineq3, lapl1, lapl2 };

inline const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::ineq4: return "ineq4";
    case BoundId::ineq3: return "ineq3";
    case BoundId::lapl1: return "lapl1";
    case BoundId::lapl2: return "lapl2";
  }
  return "?";
}

inline std::optional<BoundId> bound_id_from_string(std::string_view s) {
  if (s == "ineq4") return BoundId::ineq4;
  if (s == "ineq3") return BoundId::ineq3;
  if (s == "lapl1") return BoundId::lapl1;
  if (s == "lapl2") return BoundId::lapl2;
  return std::nullopt;
}

constexpr std::array<BoundId, 4> kAllBounds = {BoundId::ineq4, BoundId::ineq3, BoundId::lapl1,
                                               BoundId::lapl2};

// One evaluated bound. lhs/rhs hold the two sides as displayed above; gap is
// oriented so that the inequality being true means gap >= 0 (up to tolerance),
// whichever way the display points.
struct BoundReport {
  BoundId id;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool equality = false;
  double tolerance = 0.0;  // absolute threshold behind `equality`
  std::vector<double> lhs_terms;
  std::vector<double> rhs_terms;
  Partition partition;
};

// Ascending Laplacian index -> descending Spectrum index. The only place the
// two orderings meet; everything else states which one it uses.
inline double ascending_eigenvalue(std::span<const double> descending, std::size_t i) {
  if (i == 0 || i > descending.size())
    throw std::invalid_argument("ascending_eigenvalue: index out of range");
  return descending[descending.size() - i];
}

inline bool bound_is_lower_bound(BoundId id) {
  // "lower bound" meaning the display reads lhs >= rhs.
  return id == BoundId::ineq4 || id == BoundId::lapl2;
}

namespace detail {

inline void check_bound_k_range(BoundId id, std::size_t k, std::size_t n) {
  const bool ok = id == BoundId::ineq4 ? (1 < k && k <= n) : (1 < k && k < n);
  if (!ok)
    throw std::invalid_argument(std::string("evaluate_bound: k out of range for ") +
                                to_string(id));
}

// Right side of the bound, from integer edge counts only (no spectra).
inline std::vector<double> bound_rhs_terms(const Graph& g, const Partition& p, BoundId id) {
  std::vector<double> terms;
  const auto& blocks = p.blocks();
  if (id == BoundId::ineq4 || id == BoundId::ineq3) {
    for (const auto& block : blocks)
      terms.push_back(2.0 * static_cast<double>(edge_count_within(g, block)) /
                      static_cast<double>(block.size()));
    if (id == BoundId::ineq3)
      terms.push_back(-2.0 * static_cast<double>(g.edge_count()) /
                      static_cast<double>(g.order()));
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        terms.push_back(static_cast<double>(edge_count_between(g, blocks[i], blocks[j])) *
                        (1.0 / static_cast<double>(blocks[i].size()) +
                         1.0 / static_cast<double>(blocks[j].size())));
  }
  return terms;
}

}  // namespace detail

// RHS value alone; cheap enough to drive exhaustive partition searches.
inline double bound_rhs(const Graph& g, const Partition& p, BoundId id) {
  if (p.ground_size() != g.order())
    throw std::invalid_argument("bound_rhs: partition does not match graph");
  detail::check_bound_k_range(id, p.block_count(), g.order());
  const auto terms = detail::bound_rhs_terms(g, p, id);
  return std::accumulate(terms.begin(), terms.end(), 0.0);
}

// Evaluate one bound with spectra supplied by the caller (descending order;
// laplacian_desc may be empty when id is ineq4/ineq3). The eigenvalue side and
// the edge-count side never share intermediates, so detected equalities are
// evidence rather than tautology.
inline BoundReport evaluate_bound(const Graph& g, const Partition& p, BoundId id,
                                  std::span<const double> adjacency_desc,
                                  std::span<const double> laplacian_desc,
                                  const TolerancePolicy& policy = {}) {
  policy.validate();
  if (p.ground_size() != g.order())
    throw std::invalid_argument("evaluate_bound: partition does not match graph");
  const std::size_t n = g.order();
  const std::size_t k = p.block_count();
  detail::check_bound_k_range(id, k, n);

  std::vector<double> lhs_terms;
  switch (id) {
    case BoundId::ineq4:
      if (adjacency_desc.size() != n)
        throw std::invalid_argument("evaluate_bound: bad adjacency spectrum size");
      lhs_terms.assign(adjacency_desc.begin(), adjacency_desc.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    case BoundId::ineq3:
      if (adjacency_desc.size() != n)
        throw std::invalid_argument("evaluate_bound: bad adjacency spectrum size");
      // mu_{n-k+2} .. mu_n: the k-1 smallest adjacency eigenvalues.
      lhs_terms.assign(adjacency_desc.end() - static_cast<std::ptrdiff_t>(k - 1),
                       adjacency_desc.end());
      break;
    case BoundId::lapl1:
      if (laplacian_desc.size() != n)
        throw std::invalid_argument("evaluate_bound: bad laplacian spectrum size");
      for (std::size_t i = 2; i <= k; ++i)
        lhs_terms.push_back(ascending_eigenvalue(laplacian_desc, i));
      break;
    case BoundId::lapl2:
      if (laplacian_desc.size() != n)
        throw std::invalid_argument("evaluate_bound: bad laplacian spectrum size");
      for (std::size_t i = n - k + 1; i <= n; ++i)
        lhs_terms.push_back(ascending_eigenvalue(laplacian_desc, i));
      break;
  }
  std::vector<double> rhs_terms = detail::bound_rhs_terms(g, p, id);

  const double lhs = std::accumulate(lhs_terms.begin(), lhs_terms.end(), 0.0);
  const double rhs = std::accumulate(rhs_terms.begin(), rhs_terms.end(), 0.0);
  const double gap = bound_is_lower_bound(id) ? lhs - rhs : rhs - lhs;
  const double tol = policy.equality_scale(std::max(std::abs(lhs), std::abs(rhs)));
  return BoundReport{id,  lhs, rhs, gap, std::abs(lhs - rhs) <= tol, tol,
                     std::move(lhs_terms), std::move(rhs_terms), p};
}

inline BoundReport evaluate_bound(const Graph& g, const Partition& p, BoundId id,
                                  const TolerancePolicy& policy = {}) {
  const bool laplacian = id == BoundId::lapl1 || id == BoundId::lapl2;
  const Spectrum sa = laplacian ? symmetric_eigen(laplacian_matrix(g), policy)
                                : symmetric_eigen(adjacency_matrix(g), policy);
  return laplacian ? evaluate_bound(g, p, id, {}, sa.values, policy)
                   : evaluate_bound(g, p, id, sa.values, {}, policy);
}

// ---------------------------------------------------------------------------
// Audit verdicts

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

// Theorem-1 bookkeeping: one audited bound plus the structural conclusion the
// equality case demands.
struct EqualityConclusion {
  BoundReport bound;
  std::string requirement;        // what equality is supposed to imply
  bool conclusion_required;       // equality was detected
  bool conclusion_holds;          // vacuously true when not required
};

// One of the blow-up theorem's literal equality claims, reported but never
// asserted (see the strict-gap instances in the tests).
struct EqualityClaim {
  BoundId id;
  bool evaluated = false;
  bool holds = false;
  double gap = 0.0;
  std::string note;
};

struct SpectrumMatch {
  std::vector<double> full;             // descending
  std::vector<double> quotient_padded;  // quotient spectrum + zeros, descending
  double max_abs_diff = 0.0;
  bool match = false;
};

struct TraceSquareCheck {
  double full = 0.0;      // tr(A^2)
  double quotient = 0.0;  // tr((A|PxP)^2)
  bool exact = false;     // compared in exact rational arithmetic
  bool holds = false;
};

struct AuditVerdict {
  std::string theorem;  // "1".."5" or "c1"
  double tolerance = 0.0;
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_hold = false;
  bool conclusion_evaluated = false;
  bool conclusion_holds = false;
  std::vector<std::string> notes;

  // Witness payloads; each audit fills the ones that apply.
  std::vector<EqualityConclusion> equality_conclusions;           // theorem 1
  std::vector<EqualityClaim> equality_claims;                     // theorem 2
  std::optional<SpectrumMatch> spectrum_match;                    // theorem 2
  std::optional<TraceSquareCheck> trace_square;                   // theorem 2
  std::optional<double> mu1_full;                                 // theorems 3, 5, c1
  std::optional<double> mu1_quotient;                             //
  std::optional<double> sigma1_full;                              // theorem 4
  std::optional<double> sigma1_quotient;                          //
  std::optional<bool> lift_is_positive;                           // theorem 3
  std::optional<double> lift_residual;                            // theorem 3
  std::optional<bool> diagonal_blocks_regular;                    // theorem 5
  std::optional<std::size_t> first_irregular_diagonal_block;      // theorem 5, 0-based
  std::optional<bool> equality_attained;                          // theorems 4, 5, c1
  std::optional<PartitionClass> classification;                   // theorem 1, c1
};

namespace detail {

inline std::string block_label(std::size_t i) { return "P" + std::to_string(i + 1); }

// Quotient spectrum padded with n-k zeros, re-sorted descending: the shape the
// full spectrum must take when only zero eigenvalues are discarded.
inline std::vector<double> padded_descending(std::vector<double> values, std::size_t n) {
  values.resize(n, 0.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// Exact rational accumulator on __int128 with overflow detection; falls back
// to the caller's tolerance path when a denominator blows up.
struct Fraction128 {
  __int128 num = 0;
  __int128 den = 1;
  bool overflow = false;

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void add(long long an, long long ad) {
    if (overflow) return;
    static const __int128 limit = static_cast<__int128>(1) << 96;
    __int128 g = gcd128(den, ad);
    const __int128 den_red = den / g;
    const __int128 ad_red = ad / g;
    if (den_red > limit / ad_red) {
      overflow = true;
      return;
    }
    const __int128 new_den = den_red * ad_red;
    const __int128 scale_old = ad_red;
    const __int128 scale_new = den_red;
    if ((num < 0 ? -num : num) > limit / (scale_old > 0 ? scale_old : 1) ||
        (an < 0 ? static_cast<__int128>(-an) : static_cast<__int128>(an)) >
            limit / (scale_new > 0 ? scale_new : 1)) {
      overflow = true;
      return;
    }
    num = num * scale_old + static_cast<__int128>(an) * scale_new;
    den = new_den;
    g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool equals_integer(long long v) const { return !overflow && num == static_cast<__int128>(v) * den; }
};

// Integer block sum of an integral matrix over P_p x P_q.
inline long long integer_block_sum(const DenseMatrix& a, std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) {
  long long s = 0;
  for (std::size_t i : rows)
    for (std::size_t j : cols) s += std::llround(a(i, j));
  return s;
}

inline HypothesisCheck skipped_hypothesis(std::string name) {
  return HypothesisCheck{std::move(name), false, "not evaluated (earlier hypothesis failed)"};
}

}  // namespace detail

// Theorem-1 audit: wherever one of the four bounds attains equality, the
// partition must exhibit the claimed structure (equitable for ineq4; equitable
// plus G regular for ineq3; semiequitable for the Laplacian pair).
inline AuditVerdict audit_theorem1(const Graph& g, const Partition& p,
                                   const TolerancePolicy& policy = {}) {
  policy.validate();
  if (p.ground_size() != g.order())
    throw std::invalid_argument("audit_theorem1: partition does not match graph");
  AuditVerdict v;
  v.theorem = "1";
  v.tolerance = policy.eq_tol;
  v.hypotheses_hold = true;  // the theorem has no hypotheses beyond valid input
  v.classification = classify_graph_partition(g, p);

  const std::size_t n = g.order();
  const std::size_t k = p.block_count();
  const Spectrum sa = symmetric_eigen(adjacency_matrix(g), policy);
  const Spectrum sl = symmetric_eigen(laplacian_matrix(g), policy);

  bool all_hold = true;
  for (BoundId id : kAllBounds) {
    const bool needs_k_lt_n = id != BoundId::ineq4;
    if (k <= 1 || k > n || (needs_k_lt_n && k >= n)) {
      v.notes.push_back(std::string(to_string(id)) + " skipped: k out of range");
      continue;
    }
    EqualityConclusion item{
        evaluate_bound(g, p, id, sa.values, sl.values, policy), "", false, true};
    item.conclusion_required = item.bound.equality;
    bool ok = true;
    switch (id) {
      case BoundId::ineq4:
        item.requirement = "partition equitable for G";
        ok = *v.classification == PartitionClass::equitable;
        break;
      case BoundId::ineq3:
        item.requirement = "partition equitable for G and G regular";
        ok = *v.classification == PartitionClass::equitable && g.is_regular();
        break;
      case BoundId::lapl1:
      case BoundId::lapl2:
        item.requirement = "partition semiequitable for G";
        ok = *v.classification != PartitionClass::neither;
        break;
    }
    item.conclusion_holds = !item.conclusion_required || ok;
    all_hold = all_hold && item.conclusion_holds;
    v.equality_conclusions.push_back(std::move(item));
  }
  v.conclusion_evaluated = true;
  v.conclusion_holds = all_hold;
  return v;
}

// Blow-up audit. Hypothesis: every diagonal block induces an empty graph and
// every cross pair induces an empty or complete bipartite graph. Asserted
// conclusion: A and its quotient share their nonzero spectrum (checked as
// padded sorted spectra) and tr(A^2) = tr(quotient^2), exactly when integral.
// The literal per-bound equality claims are evaluated and reported only.
inline AuditVerdict audit_theorem2(const Graph& g, const Partition& p,
                                   const TolerancePolicy& policy = {}) {
  policy.validate();
  if (p.ground_size() != g.order())
    throw std::invalid_argument("audit_theorem2: partition does not match graph");
  AuditVerdict v;
  v.theorem = "2";
  v.tolerance = policy.eq_tol;

  const auto& blocks = p.blocks();
  {
    HypothesisCheck h{"diagonal blocks empty", true, ""};
    for (std::size_t i = 0; i < blocks.size() && h.holds; ++i)
      if (edge_count_within(g, blocks[i]) != 0) {
        h.holds = false;
        h.detail = "G[" + detail::block_label(i) + "] has an edge";
      }
    v.hypotheses.push_back(std::move(h));
  }
  {
    HypothesisCheck h{"cross blocks empty or complete", true, ""};
    for (std::size_t i = 0; i < blocks.size() && h.holds; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && h.holds; ++j) {
        const std::size_t e = edge_count_between(g, blocks[i], blocks[j]);
        if (e != 0 && e != blocks[i].size() * blocks[j].size()) {
          h.holds = false;
          h.detail = "G[" + detail::block_label(i) + "," + detail::block_label(j) +
                     "] is neither empty nor complete";
        }
      }
    v.hypotheses.push_back(std::move(h));
  }
  v.hypotheses_hold = v.hypotheses[0].holds && v.hypotheses[1].holds;
  if (!v.hypotheses_hold) return v;

  const std::size_t n = g.order();
  const std::size_t k = p.block_count();
  const DenseMatrix a = adjacency_matrix(g);
  const QuotientMatrix q = quotient_matrix(a, p);
  const Spectrum sa = symmetric_eigen(a, policy);
  const Spectrum sq = symmetric_eigen(q.matrix, policy);

  SpectrumMatch match;
  match.full = sa.values;
  match.quotient_padded = detail::padded_descending(sq.values, n);
  const double slack =
      policy.equality_scale(std::max(std::abs(sa.values.front()), std::abs(sa.values.back())));
  for (std::size_t i = 0; i < n; ++i)
    match.max_abs_diff =
        std::max(match.max_abs_diff, std::abs(match.full[i] - match.quotient_padded[i]));
  match.match = match.max_abs_diff <= slack;
  v.spectrum_match = std::move(match);

  TraceSquareCheck tsc;
  tsc.full = 2.0 * static_cast<double>(g.edge_count());
  {
    double t = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t += q.matrix(i, j) * q.matrix(i, j);
    tsc.quotient = t;
  }
  {
    // tr(Q^2) = sum_{p,q} S_pq^2 / (|P_p||P_q|) with integer block sums S.
    detail::Fraction128 frac;
    for (std::size_t i = 0; i < k && !frac.overflow; ++i)
      for (std::size_t j = 0; j < k && !frac.overflow; ++j) {
        const long long s = detail::integer_block_sum(a, blocks[i], blocks[j]);
        frac.add(s * s, static_cast<long long>(blocks[i].size() * blocks[j].size()));
      }
    if (!frac.overflow) {
      tsc.exact = true;
      tsc.holds = frac.equals_integer(2 * static_cast<long long>(g.edge_count()));
    } else {
      tsc.exact = false;
      tsc.holds = std::abs(tsc.full - tsc.quotient) <= policy.equality_scale(tsc.full);
    }
  }
  v.trace_square = tsc;

  const Spectrum sl = symmetric_eigen(laplacian_matrix(g), policy);
  const bool regular = g.is_regular();
  for (BoundId id : kAllBounds) {
    EqualityClaim claim{id, false, false, 0.0, ""};
    if (id == BoundId::ineq3 && !regular) {
      claim.note = "not claimed: G is not regular";
    } else if (k <= 1) {
      claim.note = "not evaluated: k = 1";
    } else if (id != BoundId::ineq4 && !(k < n)) {
      claim.note = "not evaluated: k = n";
    } else {
      const BoundReport r = evaluate_bound(g, p, id, sa.values, sl.values, policy);
      claim.evaluated = true;
      claim.holds = r.equality;
      claim.gap = r.gap;
    }
    v.equality_claims.push_back(std::move(claim));
  }

  v.conclusion_evaluated = true;
  v.conclusion_holds = v.spectrum_match->match && v.trace_square->holds;
  return v;
}

// Perron-value audit: symmetric nonnegative irreducible A with an equitable
// partition must hand its top eigenvalue to the quotient, and the quotient's
// Perron vector must lift to a positive eigenvector of A.
inline AuditVerdict audit_theorem3(const DenseMatrix& a, const Partition& p,
                                   const TolerancePolicy& policy = {}) {
  policy.validate();
  if (!a.square()) throw std::invalid_argument("audit_theorem3: matrix must be square");
  if (p.ground_size() != a.rows())
    throw std::invalid_argument("audit_theorem3: partition does not match matrix");
  AuditVerdict v;
  v.theorem = "3";
  v.tolerance = policy.eq_tol;

  const double scale = std::max(1.0, a.max_abs());
  const bool symmetric = a.max_asymmetry() <= policy.eigen_tol * scale;
  v.hypotheses.push_back({"symmetric", symmetric,
                          symmetric ? "" : "max |a_ij - a_ji| exceeds tolerance"});
  const bool nonneg = a.is_nonnegative();
  v.hypotheses.push_back({"nonnegative", nonneg, nonneg ? "" : "negative entry present"});
  if (nonneg) {
    const bool irr = is_irreducible(a);
    v.hypotheses.push_back({"irreducible", irr, irr ? "" : "support digraph not strongly connected"});
  } else {
    v.hypotheses.push_back(detail::skipped_hypothesis("irreducible"));
  }
  const bool equitable = is_equitable_for_matrix(a, p, policy);
  v.hypotheses.push_back({"partition equitable for A", equitable,
                          equitable ? "" : "some block A[P_i,P_j] is irregular"});

  v.hypotheses_hold = true;
  for (const auto& h : v.hypotheses) v.hypotheses_hold = v.hypotheses_hold && h.holds;
  if (!v.hypotheses_hold) return v;

  const Spectrum sa = symmetric_eigen(a, policy);
  const QuotientMatrix q = quotient_matrix(a, p);
  const Spectrum sq = symmetric_eigen(q.matrix, policy);
  v.mu1_full = sa.values.front();
  v.mu1_quotient = sq.values.front();
  const double slack =
      policy.equality_scale(std::max(std::abs(sa.values.front()), std::abs(sa.values.back())));
  v.tolerance = slack;
  const bool equal = std::abs(*v.mu1_full - *v.mu1_quotient) <= slack;

  const std::vector<double> y = sq.vector(0);
  const std::vector<double> x = lift_vector(y, p);
  bool positive = true;
  for (double xi : x) positive = positive && xi > 0.0;
  v.lift_is_positive = positive;

  const std::vector<double> ax = a.apply(x);
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    residual = std::max(residual, std::abs(ax[i] - *v.mu1_quotient * x[i]));
  v.lift_residual = residual;

  v.conclusion_evaluated = true;
  v.conclusion_holds = equal && positive && residual <= slack;
  v.equality_attained = equal;
  return v;
}

// Singular-value audit: sigma_1(A) >= sigma_1(A|PxQ) unconditionally; with A
// nonnegative, A A^T and A^T A irreducible, and PxQ equitable, equality.
inline AuditVerdict audit_theorem4(const DenseMatrix& a, const Partition& rows,
                                   const Partition& cols, const TolerancePolicy& policy = {}) {
  policy.validate();
  if (rows.ground_size() != a.rows() || cols.ground_size() != a.cols())
    throw std::invalid_argument("audit_theorem4: partitions do not match matrix");
  AuditVerdict v;
  v.theorem = "4";

  const bool nonneg = a.is_nonnegative();
  v.hypotheses.push_back({"nonnegative", nonneg, nonneg ? "" : "negative entry present"});
  if (nonneg) {
    const bool irr_l = is_irreducible(a.multiply(a.transpose()));
    const bool irr_r = is_irreducible(a.transpose().multiply(a));
    v.hypotheses.push_back({"A A^T irreducible", irr_l, ""});
    v.hypotheses.push_back({"A^T A irreducible", irr_r, ""});
  } else {
    v.hypotheses.push_back(detail::skipped_hypothesis("A A^T irreducible"));
    v.hypotheses.push_back(detail::skipped_hypothesis("A^T A irreducible"));
  }
  const bool equitable = is_equitable_for_matrix(a, ProductPartition{rows, cols}, policy);
  v.hypotheses.push_back({"partition equitable for A", equitable, ""});
  v.hypotheses_hold = true;
  for (const auto& h : v.hypotheses) v.hypotheses_hold = v.hypotheses_hold && h.holds;

  const QuotientMatrix q = quotient_matrix(a, ProductPartition{rows, cols});
  v.sigma1_full = singular_values(a, policy).front();
  v.sigma1_quotient = singular_values(q.matrix, policy).front();
  const double slack = policy.equality_scale(std::max(*v.sigma1_full, *v.sigma1_quotient));
  v.tolerance = slack;
  const bool inequality_ok = *v.sigma1_full >= *v.sigma1_quotient - slack;
  const bool equal = std::abs(*v.sigma1_full - *v.sigma1_quotient) <= slack;
  v.equality_attained = equal;

  // The inequality clause has no hypotheses; the equality clause is asserted
  // only when its hypotheses hold.
  v.conclusion_evaluated = true;
  v.conclusion_holds = inequality_ok && (!v.hypotheses_hold || equal);
  if (!v.hypotheses_hold)
    v.notes.push_back("equality clause not asserted: its hypotheses do not all hold");
  return v;
}

// Regular-blocks audit: with symmetric nonnegative irreducible A and all
// off-diagonal blocks regular, mu_1 passes to the quotient exactly when every
// diagonal block is regular too (an if-and-only-if, audited in both
// directions).
inline AuditVerdict audit_theorem5(const DenseMatrix& a, const Partition& p,
                                   const TolerancePolicy& policy = {}) {
  policy.validate();
  if (!a.square()) throw std::invalid_argument("audit_theorem5: matrix must be square");
  if (p.ground_size() != a.rows())
    throw std::invalid_argument("audit_theorem5: partition does not match matrix");
  AuditVerdict v;
  v.theorem = "5";
  v.tolerance = policy.eq_tol;

  const double scale = std::max(1.0, a.max_abs());
  const bool symmetric = a.max_asymmetry() <= policy.eigen_tol * scale;
  v.hypotheses.push_back({"symmetric", symmetric, ""});
  const bool nonneg = a.is_nonnegative();
  v.hypotheses.push_back({"nonnegative", nonneg, ""});
  if (nonneg) {
    const bool irr = is_irreducible(a);
    v.hypotheses.push_back({"irreducible", irr, ""});
  } else {
    v.hypotheses.push_back(detail::skipped_hypothesis("irreducible"));
  }
  {
    HypothesisCheck h{"off-diagonal blocks regular", true, ""};
    const auto& blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size() && h.holds; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && h.holds; ++j)
        if (!block_is_regular(a, blocks[i], blocks[j], policy)) {
          h.holds = false;
          h.detail = "A[" + detail::block_label(i) + "," + detail::block_label(j) +
                     "] is irregular";
        }
    v.hypotheses.push_back(std::move(h));
  }
  v.hypotheses_hold = true;
  for (const auto& h : v.hypotheses) v.hypotheses_hold = v.hypotheses_hold && h.holds;
  if (!v.hypotheses_hold) return v;

  bool diag_regular = true;
  for (std::size_t i = 0; i < p.block_count(); ++i)
    if (!block_is_regular(a, p.block(i), p.block(i), policy)) {
      diag_regular = false;
      v.first_irregular_diagonal_block = i;
      break;
    }
  v.diagonal_blocks_regular = diag_regular;

  const Spectrum sa = symmetric_eigen(a, policy);
  const Spectrum sq = symmetric_eigen(quotient_matrix(a, p).matrix, policy);
  v.mu1_full = sa.values.front();
  v.mu1_quotient = sq.values.front();
  const double slack =
      policy.equality_scale(std::max(std::abs(sa.values.front()), std::abs(sa.values.back())));
  v.tolerance = slack;
  const bool equal = std::abs(*v.mu1_full - *v.mu1_quotient) <= slack;
  v.equality_attained = equal;

  v.conclusion_evaluated = true;
  v.conclusion_holds = diag_regular == equal;
  if (diag_regular) {
    // All blocks regular now means the product partition is equitable for A
    // ("regular in A" read as: equitable).
    v.notes.push_back(is_equitable_for_matrix(a, p, policy)
                          ? "all blocks regular: partition equitable for A"
                          : "inconsistency: blocks regular but equitable check failed");
  }
  return v;
}

// Largest adjacency eigenvalue of join(G1, G2) for r_i-regular G_i of order
// n_i: the larger root of (x - r1)(x - r2) - n1 n2 = 0.
inline double finck_grohmann_mu1(std::size_t r1, std::size_t n1, std::size_t r2, std::size_t n2) {
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("finck_grohmann_mu1: graph orders must be positive");
  if (r1 + 1 > n1 || r2 + 1 > n2)
    throw std::invalid_argument("finck_grohmann_mu1: degree must be at most order-1");
  const double dr1 = static_cast<double>(r1);
  const double dr2 = static_cast<double>(r2);
  const double disc = (dr1 - dr2) * (dr1 - dr2) +
                      4.0 * static_cast<double>(n1) * static_cast<double>(n2);
  return 0.5 * (dr1 + dr2 + std::sqrt(disc));
}

// Connected graph with an at-least-semiequitable partition: mu_1 passes to
// the quotient exactly when the partition is fully equitable.
inline AuditVerdict audit_corollary1(const Graph& g, const Partition& p,
                                     const TolerancePolicy& policy = {}) {
  policy.validate();
  if (p.ground_size() != g.order())
    throw std::invalid_argument("audit_corollary1: partition does not match graph");
  AuditVerdict v;
  v.theorem = "c1";
  v.tolerance = policy.eq_tol;

  const bool connected = g.connected();
  v.hypotheses.push_back({"G connected", connected, ""});
  v.classification = classify_graph_partition(g, p);
  const bool semi = *v.classification != PartitionClass::neither;
  v.hypotheses.push_back({"partition semiequitable for G", semi,
                          semi ? to_string(*v.classification) : "some cross pair is not semiregular"});
  v.hypotheses_hold = connected && semi;
  if (!v.hypotheses_hold) return v;

  const DenseMatrix a = adjacency_matrix(g);
  const Spectrum sa = symmetric_eigen(a, policy);
  const Spectrum sq = symmetric_eigen(quotient_matrix(a, p).matrix, policy);
  v.mu1_full = sa.values.front();
  v.mu1_quotient = sq.values.front();
  const double slack =
      policy.equality_scale(std::max(std::abs(sa.values.front()), std::abs(sa.values.back())));
  v.tolerance = slack;
  const bool equal = std::abs(*v.mu1_full - *v.mu1_quotient) <= slack;
  v.equality_attained = equal;

  v.conclusion_evaluated = true;
  v.conclusion_holds = equal == (*v.classification == PartitionClass::equitable);
  return v;
}

}  // namespace interlace
