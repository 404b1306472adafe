#include "spq/sssp_asrq.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "spq/canon.hpp"
#include "spq/detail/source_order.hpp"
#include "spq/sp_tree.hpp"
#include "spq/tree_priv.hpp"

namespace spq {

int sssp_hub_count(int n, double multiplier) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!(multiplier > 0)) throw std::invalid_argument("hub multiplier must be positive");
  double ln_n = std::log(static_cast<double>(n));
  double zeta = std::sqrt(static_cast<double>(n)) * std::pow(ln_n, -2.5);
  double s = std::ceil(multiplier * zeta * ln_n);
  return static_cast<int>(std::min<double>(n, std::max(1.0, s)));
}

double sssp_edge_sigma2(double epsilon, double delta, int n) {
  if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  return (4.0 / (epsilon * epsilon)) * std::log(2.5 / delta) *
         std::log(static_cast<double>(n));
}

CountRelease sssp_asrq(const Graph& g, const PathIndex& index, PrivacyBudget budget,
                       Rng rng, const SsspOptions& options) {
  const int n = g.vertex_count();
  int s = std::min(n, std::max(1, sssp_hub_count(n, options.hub_multiplier)));

  double eps0 = 1.0, delta0 = 0.5, edge_sigma = 0.0;
  if (options.noise_on) {
    budget.validate();
    if (budget.delta <= 0)
      throw std::invalid_argument("gaussian mechanism needs delta > 0");
    std::tie(eps0, delta0) = strong_comp_params(budget.epsilon, budget.delta, s);
    edge_sigma = std::sqrt(sssp_edge_sigma2(budget.epsilon, budget.delta, n));
  }

  Rng hub_rng = rng.substream(0);
  std::vector<int> hubs = sample_hub_set(n, s, hub_rng);
  std::vector<int> hub_of(n, -1);
  for (int k = 0; k < s; ++k) hub_of[hubs[k]] = k;

  std::vector<std::unique_ptr<SPTree>> trees(s);
  std::vector<PrivatizedTree> privs;
  privs.reserve(s);
  for (int k = 0; k < s; ++k) {
    trees[k] = std::make_unique<SPTree>(g, index, hubs[k]);
    privs.push_back(private_tree(*trees[k], eps0, delta0,
                                 rng.substream(1000 + static_cast<std::uint64_t>(k)),
                                 options.noise_on));
  }

  NoiseSpec edge_spec =
      options.noise_on ? NoiseSpec::gaussian(edge_sigma) : NoiseSpec::none();
  Rng edge_rng = rng.substream(2);
  std::vector<double> noisy_edge(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    noisy_edge[e] = g.edge(e).attribute + sample(edge_spec, edge_rng);

  CountRelease release(n, budget);
  std::vector<int> order, bucket, first_hub(n);
  std::vector<double> pref(n);
  for (int u = 0; u < n; ++u) {
    detail::source_order_by_hop(index, u, order, bucket);
    pref[u] = 0.0;
    first_hub[u] = -1;  // the source itself never counts as interior
    for (int v : order) {
      if (v == u) continue;
      int e = index.parent_edge(u, v);
      int p = g.other_endpoint(e, v);
      pref[v] = pref[p] + noisy_edge[e];
      first_hub[v] = first_hub[p] >= 0 ? first_hub[p] : (hub_of[v] >= 0 ? v : -1);
      if (v <= u) continue;

      if (hub_of[u] >= 0 || hub_of[v] >= 0) {
        int k = hub_of[u] >= 0 ? hub_of[u] : hub_of[v];
        release.set(u, v, privs[k].pair_estimate(*trees[k], u, v), ReleaseRule::HubTree);
      } else if (first_hub[v] >= 0 && first_hub[v] != v) {
        int k = hub_of[first_hub[v]];
        release.set(u, v, privs[k].root_estimate(u) + privs[k].root_estimate(v),
                    ReleaseRule::HubSplit);
      } else {
        release.set(u, v, pref[v], ReleaseRule::EdgeSum);
      }
    }
  }
  return release;
}

}  // namespace spq
