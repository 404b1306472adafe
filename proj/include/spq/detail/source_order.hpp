#pragma once

#include <vector>

#include "spq/path_index.hpp"

namespace spq::detail {

/// Vertices sorted by hop distance from u (counting sort), so every vertex
/// appears after its predecessor on P(u, v). Lets callers fold prefix state
/// down the source-u shortest-path tree in O(n) without building child lists.
inline void source_order_by_hop(const PathIndex& index, int u, std::vector<int>& out,
                                std::vector<int>& bucket) {
  const int n = index.vertex_count();
  int max_hop = 0;
  for (int v = 0; v < n; ++v) max_hop = std::max(max_hop, index.hop(u, v));
  bucket.assign(max_hop + 2, 0);
  for (int v = 0; v < n; ++v) ++bucket[index.hop(u, v) + 1];
  for (int h = 1; h <= max_hop + 1; ++h) bucket[h] += bucket[h - 1];
  out.assign(n, 0);
  for (int v = 0; v < n; ++v) out[bucket[index.hop(u, v)]++] = v;
}

}  // namespace spq::detail
