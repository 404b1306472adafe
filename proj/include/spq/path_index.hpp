#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spq/graph.hpp"

namespace spq {

/// Augmented distance realizing deterministic symbolic perturbation: compare
/// by weight first, then by the sorted edge-index sequence of the path,
/// lexicographically. Appending an edge strictly increases the order, and the
/// order is invariant under disjoint common extensions, so per-source Dijkstra
/// under it yields globally unique, subpath-consistent shortest paths.
struct AugDist {
  double weight = 0.0;
  std::vector<int> tiebreak;  // sorted ascending edge indices

  friend bool operator<(const AugDist& a, const AugDist& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.tiebreak < b.tiebreak;
  }
  friend bool operator==(const AugDist& a, const AugDist& b) {
    return a.weight == b.weight && a.tiebreak == b.tiebreak;
  }
};

/// All-pairs unique shortest paths with predecessor structure. Immutable after
/// construction; safe for concurrent reads.
class PathIndex {
 public:
  static PathIndex build(const Graph& g);

  int vertex_count() const { return n_; }

  double distance(int u, int v) const { return dist_[idx(u, v)]; }
  int hop(int u, int v) const { return hop_[idx(u, v)]; }

  /// Edge by which P(root, v) reaches v; -1 when v == root.
  int parent_edge(int root, int v) const { return parent_edge_[idx(root, v)]; }
  /// Predecessor of v on P(root, v); root itself when v == root.
  int parent(const Graph& g, int root, int v) const;

  /// Distance with the materialized tie-break sequence.
  AugDist aug_distance(const Graph& g, int u, int v) const;

  /// Edge indices along P(u, v), ordered from u to v.
  std::vector<int> path_edges(const Graph& g, int u, int v) const;
  /// Vertices along P(u, v), from u to v inclusive (hop+1 entries).
  std::vector<int> path_vertices(const Graph& g, int u, int v) const;

  /// First and last vertices of S met when traversing P(u, v) from u.
  /// `in_set` is an n-sized membership mask. Present only when the path meets
  /// S at least twice (counting endpoints); `count_out`, if given, receives
  /// the number of S-vertices on the path either way.
  std::optional<std::pair<int, int>> first_last_on_path(const Graph& g, int u, int v,
                                                        const std::vector<char>& in_set,
                                                        int* count_out = nullptr) const;

 private:
  PathIndex() = default;
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  std::vector<double> dist_;
  std::vector<int> parent_edge_;
  std::vector<int> hop_;
};

}  // namespace spq
