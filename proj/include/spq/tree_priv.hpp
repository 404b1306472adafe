#pragma once

#include <vector>

#include "spq/rng.hpp"
#include "spq/sp_tree.hpp"

namespace spq {

/// Balanced partition vertex of the subtree induced by `verts` (which must
/// contain `anchor` and be closed under the tree paths to it): descend from
/// the anchor into the unique child whose descendant count (self included)
/// exceeds half the subtree, until no child does. For a single-vertex subtree
/// this is the vertex itself.
int partition_vertex(const SPTree& tree, int anchor, const std::vector<int>& verts);

/// Whole-tree convenience overload (anchor = root, verts = all).
int partition_vertex(const SPTree& tree);

/// Per-record Gaussian variance for tree privatization:
///   sigma^2 = (1/eps0^2) * ln(1.25/delta0) * ln(n).
double tree_record_sigma2(double eps0, double delta0, int n);

/// Rooted shortest-path tree with noisy aggregate records. Each record covers
/// a tree path from a recursion anchor to the partition vertex v*, or a single
/// edge from v* to a child. Every node's root-distance estimate is the sum of
/// at most ceil(log2 n) + 1 records.
class PrivatizedTree {
 public:
  struct Record {
    int level;       // recursion depth, 0 at the top
    int anchor;      // path start (recursion anchor)
    int target;      // path end (v*, or a child of v*)
    bool is_edge;    // single-edge record (fires when v* is the part's anchor)
    double value;    // exact segment attribute sum + one Gaussian draw
  };

  int root() const { return root_; }
  /// Estimated attribute distance from the root to v.
  double root_estimate(int v) const { return estimate_[v]; }
  /// Number of records summed for v's root-distance estimate.
  int term_count(int v) const { return term_count_[v]; }
  const std::vector<Record>& records() const { return records_; }

  /// d-hat(u, v) = d-hat(u) + d-hat(v) - 2 d-hat(lca(u, v)) in attribute units.
  double pair_estimate(const SPTree& tree, int u, int v) const;

 private:
  friend PrivatizedTree private_tree(const SPTree&, double, double, Rng, bool);
  int root_ = 0;
  std::vector<double> estimate_;
  std::vector<int> term_count_;
  std::vector<Record> records_;
};

/// Recursive tree privatization with Gaussian noise at tree_record_sigma2.
/// noise_on = false reproduces exact root distances (record for record).
/// Requires eps0 > 0 and delta0 in (0, 1).
PrivatizedTree private_tree(const SPTree& tree, double eps0, double delta0, Rng rng,
                            bool noise_on = true);

}  // namespace spq
