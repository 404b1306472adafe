#include "spq/sp_tree.hpp"

#include <stdexcept>

namespace spq {

SPTree::SPTree(const Graph& g, const PathIndex& index, int root) : root_(root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("invalid tree root");
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, 0);
  subtree_size_.assign(n, 1);
  children_.assign(n, {});
  root_attr_.assign(n, 0.0);
  parent_attr_.assign(n, 0.0);
  parent_[root] = root;

  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    int e = index.parent_edge(root, v);
    parent_[v] = g.other_endpoint(e, v);
    parent_edge_[v] = e;
    parent_attr_[v] = g.edge(e).attribute;
    depth_[v] = index.hop(root, v);
    children_[parent_[v]].push_back(v);
  }

  // Root-first order by increasing depth would need a sort; a stack DFS from
  // the root is cheaper and gives the same parents-before-children guarantee.
  preorder_.reserve(n);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    for (int c : children_[v]) stack.push_back(c);
  }
  if (static_cast<int>(preorder_.size()) != n)
    throw std::logic_error("shortest-path tree does not span the graph");

  for (int i = 1; i < n; ++i) {
    int v = preorder_[i];
    root_attr_[v] = root_attr_[parent_[v]] + parent_attr_[v];
  }
  for (int i = n - 1; i >= 1; --i) {
    int v = preorder_[i];
    subtree_size_[parent_[v]] += subtree_size_[v];
  }
}

int SPTree::lca(int u, int v) const {
  while (u != v) {
    if (depth_[u] >= depth_[v])
      u = parent_[u];
    else
      v = parent_[v];
  }
  return u;
}

}  // namespace spq
