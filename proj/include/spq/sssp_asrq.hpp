#pragma once

#include <vector>

#include "spq/budget.hpp"
#include "spq/graph.hpp"
#include "spq/path_index.hpp"
#include "spq/release.hpp"
#include "spq/rng.hpp"

namespace spq {

/// Hub-set size for the approximate-DP counting algorithm:
///   |S| = min(n, max(1, ceil(multiplier * zeta * ln n))),
///   zeta = sqrt(n) * (ln n)^{-2.5}.
int sssp_hub_count(int n, double multiplier = 1.0);

/// Per-edge Gaussian variance for the non-hub perturbation:
///   sigma^2 = (4/eps^2) * ln(2.5/delta) * ln(n).
double sssp_edge_sigma2(double epsilon, double delta, int n);

struct SsspOptions {
  double hub_multiplier = 1.0;
  bool noise_on = true;
};

/// (eps, delta)-DP all-pairs counting release via sampled shortest-path trees.
/// Hubs get privatized trees at the strong-composition budget (eps0, delta0)
/// with k = |S|; every other edge carries one Gaussian draw. Per pair, exactly
/// one branch fires:
///   1. an endpoint is a hub  -> that hub's tree (smaller-id hub if both);
///   2. an interior hub x lies on P(u,v) (first in path order from the
///      smaller-id endpoint) -> tree(x) answers both halves;
///   3. otherwise -> noisy edge sum along P(u,v).
/// Requires eps in (0, 1] and delta in (0, 1).
CountRelease sssp_asrq(const Graph& g, const PathIndex& index, PrivacyBudget budget,
                       Rng rng, const SsspOptions& options = {});

}  // namespace spq
