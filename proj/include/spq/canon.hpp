#pragma once

#include <utility>
#include <vector>

#include "spq/budget.hpp"
#include "spq/graph.hpp"
#include "spq/path_index.hpp"
#include "spq/release.hpp"
#include "spq/rng.hpp"

namespace spq {

/// Hub-set size for the pure-DP counting algorithm:
///   |S| = min(n, ceil(multiplier * 100 * zeta * ln n)),
///   zeta = n^{1/3} * (ln n)^{-2/3}.
/// The multiplier keeps the literal constant 100 usable at desk scale, where
/// it would otherwise force S = V.
int canon_hub_count(int n, double multiplier = 1.0);

/// Uniform sample of `count` distinct vertices, sorted ascending.
std::vector<int> sample_hub_set(int n, int count, Rng& rng);

/// Cut vertices and canonical segments induced by a hub set S over the
/// shortest paths of S x S. Segments are pairwise edge-disjoint, cover every
/// hub-pair path exactly, and number at most |S|^2 per path.
class SegmentCatalog {
 public:
  struct Segment {
    int a, b;                // endpoint vertices, a < b
    std::vector<int> edges;  // edge indices along P(a, b), ordered from a
    double attr_sum;         // exact attribute sum
  };

  static SegmentCatalog build(const Graph& g, const PathIndex& index,
                              std::vector<int> hubs);

  const std::vector<int>& hubs() const { return hubs_; }
  int hub_count() const { return static_cast<int>(hubs_.size()); }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  const Segment& segment(int i) const { return segments_[i]; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Ordered cut vertices along P(hubs[i], hubs[j]), starting at hubs[i].
  const std::vector<int>& cut_vertices(int i, int j) const;
  /// Segment ids whose concatenation is P(hubs[i], hubs[j]).
  const std::vector<int>& decomposition(int i, int j) const;

  /// Hub index of vertex v, or -1.
  int hub_index(int v) const { return hub_index_[v]; }
  /// Segment covering edge e, or -1 (segments are disjoint, so unique).
  int segment_of_edge(int e) const { return segment_of_edge_[e]; }

 private:
  SegmentCatalog() = default;
  std::size_t pair_slot(int i, int j) const;

  std::vector<int> hubs_;
  std::vector<int> hub_index_;
  std::vector<Segment> segments_;
  std::vector<int> segment_of_edge_;
  // per unordered hub pair (i < j), stored from the smaller hub's side
  std::vector<std::vector<int>> cut_vertices_;
  std::vector<std::vector<int>> decomposition_;
};

/// Laplace scale used at both canon injection sites (segments and edges).
double canon_laplace_scale(double epsilon);

struct CanonOptions {
  double hub_multiplier = 1.0;
  bool noise_on = true;
};

/// Pure-DP all-pairs counting release via canonical segments. Budget must
/// have delta == 0. One Laplace draw per segment and per edge, reused across
/// every pair. Pairs whose path meets S at least twice are answered by
/// noisy-edge prefix + noisy segment sum + noisy-edge suffix; the rest by the
/// plain noisy edge sum.
CountRelease canon_apsd(const Graph& g, const PathIndex& index, PrivacyBudget budget,
                        Rng rng, const CanonOptions& options = {});

/// Test hook for the unit l1-sensitivity of the segment-sum vector: recompute
/// all segment attribute sums after adding delta_w to one edge's attribute and
/// return the total l1 change.
double segment_sensitivity_probe(const Graph& g, const SegmentCatalog& catalog,
                                 int edge, double delta_w);

}  // namespace spq
