#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace interlace {

// Two knobs shared by everything downstream of the eigensolver:
//   eigen_tol  absorbs solver noise (residual checks, symmetry checks),
//   eq_tol     decides when two computed quantities count as "equal"
//              (spectra, bound sides, block sums).
// Both are relative; callers multiply by a problem scale, never below 1.
struct TolerancePolicy {
  double eigen_tol = 1e-10;
  double eq_tol = 1e-8;

  void validate() const {
    if (!(eigen_tol > 0.0) || !std::isfinite(eigen_tol))
      throw std::invalid_argument("TolerancePolicy: eigen_tol must be positive and finite");
    if (!(eq_tol > 0.0) || !std::isfinite(eq_tol))
      throw std::invalid_argument("TolerancePolicy: eq_tol must be positive and finite");
    if (eq_tol < eigen_tol)
      throw std::invalid_argument("TolerancePolicy: eq_tol must be at least eigen_tol");
  }

  // Absolute threshold for comparing values that live at magnitude `scale`.
  double equality_scale(double scale) const { return eq_tol * std::max(1.0, scale); }
};

}  // namespace interlace
