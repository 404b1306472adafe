#include "spq/oracle.hpp"

#include <algorithm>

namespace spq {

double exact_count(const Graph& g, const PathIndex& index, int u, int v) {
  if (u == v) return 0.0;
  // Summed in path order from u, matching the release's prefix folding, so
  // zero-noise runs agree bit for bit.
  double sum = 0.0;
  for (int e : index.path_edges(g, u, v)) sum += g.edge(e).attribute;
  return sum;
}

double exact_bottleneck(const Graph& g, const PathIndex& index, int u, int v) {
  if (u == v) return 0.0;
  double best = g.edge(index.path_edges(g, u, v).front()).attribute;
  for (int e : index.path_edges(g, u, v)) best = std::min(best, g.edge(e).attribute);
  return best;
}

}  // namespace spq
