#pragma once

// Independent oracles for cross-checking the library. Everything here is
// deliberately written without reusing PathIndex internals: value-iteration
// APSP instead of Dijkstra, explicit path enumeration instead of parent
// chains.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "spq/generate.hpp"
#include "spq/graph.hpp"

namespace testutil {

struct OraclePath {
  double weight = std::numeric_limits<double>::infinity();
  std::vector<int> sorted_edges;  // the tie-break key
  std::vector<int> edge_seq;      // in order from the source

  bool better_than(const OraclePath& o) const {
    if (weight != o.weight) return weight < o.weight;
    return sorted_edges < o.sorted_edges;
  }
};

/// All-pairs unique shortest paths by repeated relaxation (Bellman-Ford style)
/// under the (weight, sorted-edge-set) order.
inline std::vector<std::vector<OraclePath>> value_iteration_paths(const spq::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<OraclePath>> best(n, std::vector<OraclePath>(n));
  for (int s = 0; s < n; ++s) {
    best[s][s].weight = 0.0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        for (auto [a, b] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
          if (std::isinf(best[s][a].weight)) continue;
          OraclePath cand;
          cand.weight = best[s][a].weight + edge.weight;
          cand.sorted_edges = best[s][a].sorted_edges;
          cand.sorted_edges.insert(
              std::lower_bound(cand.sorted_edges.begin(), cand.sorted_edges.end(), e), e);
          cand.edge_seq = best[s][a].edge_seq;
          cand.edge_seq.push_back(e);
          if (cand.better_than(best[s][b])) {
            best[s][b] = std::move(cand);
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
  }
  return best;
}

/// Exhaustive simple-path enumeration; the gold standard for tiny graphs.
inline OraclePath enumerate_best_path(const spq::Graph& g, int u, int v) {
  OraclePath best;
  std::vector<char> used(g.vertex_count(), 0);
  OraclePath current;
  current.weight = 0.0;
  used[u] = 1;
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == v) {
      if (current.better_than(best)) best = current;
      return;
    }
    for (auto [next, e] : g.neighbors(at)) {
      if (used[next]) continue;
      used[next] = 1;
      OraclePath saved = current;
      current.weight += g.edge(e).weight;
      current.sorted_edges.insert(
          std::lower_bound(current.sorted_edges.begin(), current.sorted_edges.end(), e),
          e);
      current.edge_seq.push_back(e);
      self(self, next);
      current = std::move(saved);
      used[next] = 0;
    }
  };
  dfs(dfs, u);
  return best;
}

/// Plain Floyd-Warshall on weights, ignoring tie-breaks.
inline std::vector<std::vector<double>> floyd_warshall(const spq::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(
      n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
    d[e.v][e.u] = d[e.u][e.v];
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline spq::GraphFamily mixed_family(int i) {
  switch (i % 4) {
    case 0: return spq::GraphFamily::ErdosRenyi;
    case 1: return spq::GraphFamily::RandomTree;
    case 2: return spq::GraphFamily::Grid;
    default: return spq::GraphFamily::Path;
  }
}

}  // namespace testutil
