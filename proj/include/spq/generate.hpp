#pragma once

#include <cstdint>
#include <string>

#include "spq/graph.hpp"

namespace spq {

enum class GraphFamily { Path, Grid, ErdosRenyi, RandomGeometric, RandomTree };

GraphFamily parse_family(const std::string& name);
std::string family_name(GraphFamily family);

struct GenOptions {
  // Weights drawn uniform on (w_min, w_max]; attributes uniform on
  // [a_min, a_max), quantized to multiples of 2^-20 so that attribute sums are
  // exact in double regardless of summation order.
  double w_min = 0.0;
  double w_max = 1.0;
  double a_min = 0.0;
  double a_max = 1.0;
};

/// Connected random graph of the given family. Erdos-Renyi and geometric
/// families resample until connected; throws std::runtime_error if the retry
/// budget is exhausted. Deterministic in (family, n, seed).
Graph generate_graph(GraphFamily family, int n, std::uint64_t seed,
                     const GenOptions& options = {});

}  // namespace spq
