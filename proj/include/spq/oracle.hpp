#pragma once

#include "spq/graph.hpp"
#include "spq/path_index.hpp"

namespace spq {

/// Exact attribute sum along P(u, v).
double exact_count(const Graph& g, const PathIndex& index, int u, int v);

/// Exact minimum attribute along P(u, v); 0 when u == v.
double exact_bottleneck(const Graph& g, const PathIndex& index, int u, int v);

}  // namespace spq
