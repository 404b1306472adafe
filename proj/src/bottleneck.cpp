#include "spq/bottleneck.hpp"

#include <cmath>
#include <stdexcept>

#include "spq/detail/source_order.hpp"

namespace spq {

double bottleneck_laplace_scale(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  return 1.0 / epsilon;
}

double bottleneck_gaussian_scale(double epsilon, double delta) {
  if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  return std::sqrt(2.0 * std::log(1.25 / delta)) / epsilon;
}

BottleneckRelease bottleneck_release(const Graph& g, const PathIndex& index,
                                     PrivacyBudget budget, Rng rng, bool noise_on) {
  NoiseSpec spec = NoiseSpec::none();
  if (noise_on) {
    budget.validate();
    spec = budget.delta == 0
               ? NoiseSpec::laplace(bottleneck_laplace_scale(budget.epsilon))
               : NoiseSpec::gaussian(bottleneck_gaussian_scale(budget.epsilon, budget.delta));
  }

  const int n = g.vertex_count();
  BottleneckRelease out;
  out.n_ = n;
  out.budget_ = budget;
  out.noisy_attr_.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    out.noisy_attr_[e] = g.edge(e).attribute + sample(spec, rng);

  // Argmin on original attributes, folded down each source tree. Ties go to
  // the smaller edge index.
  out.argmin_edge_.assign(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> order, bucket;
  for (int u = 0; u < n; ++u) {
    int* row = &out.argmin_edge_[static_cast<std::size_t>(u) * n];
    detail::source_order_by_hop(index, u, order, bucket);
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      int p = g.other_endpoint(e, v);
      int best = row[p];
      if (best < 0 || g.edge(e).attribute < g.edge(best).attribute ||
          (g.edge(e).attribute == g.edge(best).attribute && e < best))
        best = e;
      row[v] = best;
    }
  }
  return out;
}

double bottleneck_error(const BottleneckRelease& release, const Graph& g,
                        const PathIndex& index) {
  const int n = g.vertex_count();
  double worst = 0.0;
  std::vector<int> order, bucket;
  std::vector<double> exact(n);
  for (int u = 0; u < n; ++u) {
    detail::source_order_by_hop(index, u, order, bucket);
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      int p = g.other_endpoint(e, v);
      exact[v] = p == u ? g.edge(e).attribute : std::min(exact[p], g.edge(e).attribute);
      if (v > u)
        worst = std::max(worst, std::abs(release.value(u, v) - exact[v]));
    }
  }
  return worst;
}

}  // namespace spq
