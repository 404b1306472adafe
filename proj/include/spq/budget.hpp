#pragma once

#include <utility>

namespace spq {

/// Privacy budget. delta == 0 means pure DP.
struct PrivacyBudget {
  double epsilon = 1.0;
  double delta = 0.0;

  /// Throws std::invalid_argument unless epsilon > 0 and 0 <= delta < 1.
  void validate() const;
};

/// Per-subroutine budget for k-fold strong composition:
///   eps0 = eps / (4 * sqrt(2 k ln(4/delta))),  delta0 = delta / (4 k)
/// so that the composition of k (eps0, delta0) mechanisms plus one
/// (eps/2, delta/2) mechanism stays within (eps, delta).
/// Requires k >= 1, eps in (0, 1], delta in (0, 1).
std::pair<double, double> strong_comp_params(double epsilon, double delta, int k);

/// Gaussian-mechanism scale: sigma = l2_sensitivity * sqrt(2 ln(1.25/delta)) / eps.
/// Requires eps in (0, 1], delta in (0, 1), l2_sensitivity > 0.
double gaussian_sigma(double epsilon, double delta, double l2_sensitivity);

}  // namespace spq
