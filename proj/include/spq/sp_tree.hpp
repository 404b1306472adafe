#pragma once

#include <vector>

#include "spq/graph.hpp"
#include "spq/path_index.hpp"

namespace spq {

/// Single-source shortest-path tree. Root-to-v tree paths coincide edge for
/// edge with PathIndex paths. Root distances are in attribute units (the
/// private payload), not weight units.
class SPTree {
 public:
  SPTree(const Graph& g, const PathIndex& index, int root);

  int root() const { return root_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }

  int parent(int v) const { return parent_[v]; }
  int parent_edge(int v) const { return parent_edge_[v]; }
  int depth(int v) const { return depth_[v]; }
  int subtree_size(int v) const { return subtree_size_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }

  /// Sum of edge attributes on the tree path root -> v.
  double root_attr_distance(int v) const { return root_attr_[v]; }
  /// Attribute of the edge (parent(v), v).
  double parent_edge_attr(int v) const { return parent_attr_[v]; }

  /// Deepest common ancestor of u and v.
  int lca(int u, int v) const;

  /// Vertices in a root-first order where parents precede children.
  const std::vector<int>& preorder() const { return preorder_; }

 private:
  int root_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<std::vector<int>> children_;
  std::vector<double> root_attr_;
  std::vector<double> parent_attr_;
  std::vector<int> preorder_;
};

}  // namespace spq
