#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "interlace/tolerance.hpp"

namespace interlace {

// Result of comparing a large descending spectrum alpha (size n) against a
// small one beta (size k): does beta interlace alpha, for which r is the
// interlacing r-tight, and how long are the boundary equality runs.
struct InterlacingReport {
  std::size_t n = 0;
  std::size_t k = 0;
  bool holds = false;
  std::vector<std::size_t> tight_r_values;  // ascending; nonempty iff tight
  std::size_t p_max = 0;                    // longest head run: alpha_i = beta_i
  std::size_t q_max = 0;                    // longest tail run: beta_i = alpha_{n-k+i}
  bool exact = false;                       // p_max + q_max >= 1
  bool degenerate = false;                  // outside 1 < k < n, where the
                                            // classifications lose their meaning
  double tolerance = 0.0;                   // absolute equality threshold used
};

namespace detail {

inline double spectra_equality_slack(std::span<const double> alpha, const TolerancePolicy& policy) {
  return policy.equality_scale(std::max(std::abs(alpha.front()), std::abs(alpha.back())));
}

inline void validate_spectra(std::span<const double> alpha, std::span<const double> beta,
                             const TolerancePolicy& policy) {
  policy.validate();
  if (alpha.empty() || beta.empty())
    throw std::invalid_argument("interlacing: spectra must be nonempty");
  if (beta.size() > alpha.size())
    throw std::invalid_argument("interlacing: small spectrum larger than big one");
  const double slack = spectra_equality_slack(alpha, policy);
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i + 1] > alpha[i] + slack)
      throw std::invalid_argument("interlacing: alpha is not sorted descending");
  for (std::size_t i = 0; i + 1 < beta.size(); ++i)
    if (beta[i + 1] > beta[i] + slack)
      throw std::invalid_argument("interlacing: beta is not sorted descending");
}

}  // namespace detail

// True iff alpha_i >= beta_i >= alpha_{n-k+i} for all i in [k], within eq_tol
// scaled by the extreme entries of alpha.
inline bool check_interlacing(std::span<const double> alpha, std::span<const double> beta,
                              const TolerancePolicy& policy = {}) {
  detail::validate_spectra(alpha, beta, policy);
  const std::size_t n = alpha.size();
  const std::size_t k = beta.size();
  const double slack = detail::spectra_equality_slack(alpha, policy);
  for (std::size_t i = 0; i < k; ++i) {
    if (alpha[i] < beta[i] - slack) return false;
    if (beta[i] < alpha[n - k + i] - slack) return false;
  }
  return true;
}

inline InterlacingReport analyze_interlacing(std::span<const double> alpha,
                                             std::span<const double> beta,
                                             const TolerancePolicy& policy = {}) {
  InterlacingReport rep;
  rep.n = alpha.size();
  rep.k = beta.size();
  rep.holds = check_interlacing(alpha, beta, policy);
  rep.tolerance = detail::spectra_equality_slack(alpha, policy);
  rep.degenerate = !(1 < rep.k && rep.k < rep.n);
  if (!rep.holds) return rep;

  const std::size_t n = rep.n;
  const std::size_t k = rep.k;
  const auto eq = [&](double x, double y) { return std::abs(x - y) <= rep.tolerance; };

  while (rep.p_max < k && eq(alpha[rep.p_max], beta[rep.p_max])) ++rep.p_max;
  while (rep.q_max < k && eq(beta[k - 1 - rep.q_max], alpha[n - 1 - rep.q_max])) ++rep.q_max;
  rep.exact = rep.p_max + rep.q_max >= 1;

  // r is admissible iff head equalities cover 1..r and tail equalities cover
  // r+1..k, i.e. max(0, k - q_max) <= r <= p_max.
  const std::size_t lo = k > rep.q_max ? k - rep.q_max : 0;
  for (std::size_t r = lo; r <= rep.p_max; ++r) rep.tight_r_values.push_back(r);
  return rep;
}

// All r in [0,k] making the interlacing r-tight; empty means not tight.
// Rejects inputs that do not interlace in the first place.
inline std::vector<std::size_t> classify_tight(std::span<const double> alpha,
                                               std::span<const double> beta,
                                               const TolerancePolicy& policy = {}) {
  const InterlacingReport rep = analyze_interlacing(alpha, beta, policy);
  if (!rep.holds) throw std::invalid_argument("classify_tight: spectra do not interlace");
  return rep.tight_r_values;
}

// Maximal head/tail equality run lengths (p_max, q_max). The interlacing is
// (p,q)-exact for every p <= p_max, q <= q_max with 0 < p+q <= k.
inline std::pair<std::size_t, std::size_t> classify_exact(std::span<const double> alpha,
                                                          std::span<const double> beta,
                                                          const TolerancePolicy& policy = {}) {
  const InterlacingReport rep = analyze_interlacing(alpha, beta, policy);
  if (!rep.holds) throw std::invalid_argument("classify_exact: spectra do not interlace");
  return {rep.p_max, rep.q_max};
}

}  // namespace interlace
