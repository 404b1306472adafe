#pragma once

#include <vector>

#include "spq/budget.hpp"
#include "spq/graph.hpp"
#include "spq/path_index.hpp"
#include "spq/rng.hpp"

namespace spq {

/// Laplace scale of the pure-DP bottleneck branch: b = 1/eps.
double bottleneck_laplace_scale(double epsilon);
/// Gaussian scale of the approximate-DP branch: sigma = sqrt(2 ln(1.25/delta)) / eps.
double bottleneck_gaussian_scale(double epsilon, double delta);

/// All-pairs bottleneck answers via input perturbation. The argmin edge per
/// pair is found on the ORIGINAL attributes (ties to the smallest edge index)
/// and only its noisy attribute is released; the argmin identity stays
/// internal. Noisy attributes are released unclamped and may be negative.
class BottleneckRelease {
 public:
  int vertex_count() const { return n_; }
  const PrivacyBudget& budget() const { return budget_; }

  /// Released value: noisy attribute of the pair's bottleneck edge.
  double value(int u, int v) const { return noisy_attr_[argmin_edge(u, v)]; }
  /// Internal argmin edge (test hook; never part of the public release).
  int argmin_edge(int u, int v) const {
    return argmin_edge_[static_cast<std::size_t>(u) * n_ + v];
  }
  const std::vector<double>& noisy_attributes() const { return noisy_attr_; }

 private:
  friend BottleneckRelease bottleneck_release(const Graph&, const PathIndex&,
                                              PrivacyBudget, Rng, bool);
  int n_ = 0;
  PrivacyBudget budget_;
  std::vector<double> noisy_attr_;
  std::vector<int> argmin_edge_;  // diagonal entries unused (-1)
};

/// delta == 0 selects the Laplace branch, delta > 0 the Gaussian branch.
/// noise_on = false keeps the original attribute table.
BottleneckRelease bottleneck_release(const Graph& g, const PathIndex& index,
                                     PrivacyBudget budget, Rng rng,
                                     bool noise_on = true);

/// max over all pairs of |released - exact bottleneck|.
double bottleneck_error(const BottleneckRelease& release, const Graph& g,
                        const PathIndex& index);

}  // namespace spq
