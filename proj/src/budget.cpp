#include "spq/budget.hpp"

#include <cmath>
#include <stdexcept>

namespace spq {

void PrivacyBudget::validate() const {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta >= 0 && delta < 1)) throw std::invalid_argument("delta must be in [0, 1)");
}

std::pair<double, double> strong_comp_params(double epsilon, double delta, int k) {
  if (k < 1) throw std::invalid_argument("strong composition needs k >= 1");
  if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  double eps0 = epsilon / (4.0 * std::sqrt(2.0 * k * std::log(4.0 / delta)));
  double delta0 = delta / (4.0 * k);
  return {eps0, delta0};
}

double gaussian_sigma(double epsilon, double delta, double l2_sensitivity) {
  if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  if (!(l2_sensitivity > 0)) throw std::invalid_argument("l2 sensitivity must be positive");
  return l2_sensitivity * std::sqrt(2.0 * std::log(1.25 / delta)) / epsilon;
}

}  // namespace spq
