#include "spq/tree_priv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace spq {

namespace {

// Subtree sizes restricted to a part. The part is connected and upward-closed
// toward its anchor, so folding each vertex into its global parent works as
// long as vertices are visited deepest first.
void part_subtree_sizes(const SPTree& tree, int anchor, const std::vector<int>& verts,
                        const std::vector<char>& in_part, std::vector<int>& cnt) {
  std::vector<int> by_depth(verts);
  std::sort(by_depth.begin(), by_depth.end(),
            [&](int a, int b) { return tree.depth(a) > tree.depth(b); });
  for (int v : verts) cnt[v] = 1;
  for (int v : by_depth) {
    if (v == anchor) continue;
    int p = tree.parent(v);
    if (in_part[p]) cnt[p] += cnt[v];
  }
}

int descend(const SPTree& tree, int anchor, int part_size,
            const std::vector<char>& in_part, const std::vector<int>& cnt) {
  int v = anchor;
  for (;;) {
    int next = -1;
    for (int c : tree.children(v)) {
      if (!in_part[c]) continue;
      if (2 * cnt[c] > part_size) {
        next = c;
        break;
      }
    }
    if (next < 0) return v;
    v = next;
  }
}

}  // namespace

int partition_vertex(const SPTree& tree, int anchor, const std::vector<int>& verts) {
  if (verts.empty()) throw std::invalid_argument("empty part");
  const int n = tree.vertex_count();
  std::vector<char> in_part(n, 0);
  for (int v : verts) {
    if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
    in_part[v] = 1;
  }
  if (!in_part[anchor]) throw std::invalid_argument("part must contain its anchor");
  std::vector<int> cnt(n, 0);
  part_subtree_sizes(tree, anchor, verts, in_part, cnt);
  if (cnt[anchor] != static_cast<int>(verts.size()))
    throw std::invalid_argument("part is not connected through its anchor");
  return descend(tree, anchor, static_cast<int>(verts.size()), in_part, cnt);
}

int partition_vertex(const SPTree& tree) {
  std::vector<int> all(tree.vertex_count());
  for (int v = 0; v < tree.vertex_count(); ++v) all[v] = v;
  return partition_vertex(tree, tree.root(), all);
}

double tree_record_sigma2(double eps0, double delta0, int n) {
  if (!(eps0 > 0)) throw std::invalid_argument("eps0 must be positive");
  if (!(delta0 > 0 && delta0 < 1)) throw std::invalid_argument("delta0 must be in (0, 1)");
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  return (1.0 / (eps0 * eps0)) * std::log(1.25 / delta0) *
         std::log(static_cast<double>(n));
}

double PrivatizedTree::pair_estimate(const SPTree& tree, int u, int v) const {
  int w = tree.lca(u, v);
  return estimate_[u] + estimate_[v] - 2.0 * estimate_[w];
}

PrivatizedTree private_tree(const SPTree& tree, double eps0, double delta0, Rng rng,
                            bool noise_on) {
  const int n = tree.vertex_count();
  NoiseSpec spec = noise_on
                       ? NoiseSpec::gaussian(std::sqrt(tree_record_sigma2(eps0, delta0, n)))
                       : NoiseSpec::none();

  PrivatizedTree out;
  out.root_ = tree.root();
  out.estimate_.assign(n, 0.0);
  out.term_count_.assign(n, -1);

  std::vector<char> in_part(n, 0), below(n, 0);
  std::vector<int> cnt(n, 0);

  auto assign = [&](int v, double base, int terms) {
    // A partition vertex anchors several child parts, each of which resolves
    // it to the same sum; the first resolution wins.
    if (out.term_count_[v] >= 0) return;
    out.estimate_[v] = base;
    out.term_count_[v] = terms;
  };

  // Appends the part-restricted subtree of `from` (inclusive) to dst.
  auto collect = [&](int from, std::vector<int>& dst) {
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      dst.push_back(v);
      for (auto it = tree.children(v).rbegin(); it != tree.children(v).rend(); ++it)
        if (in_part[*it]) stack.push_back(*it);
    }
  };

  std::function<void(const std::vector<int>&, int, double, int, int)> recurse =
      [&](const std::vector<int>& verts, int anchor, double base, int terms, int level) {
        if (verts.size() == 1) {
          assign(anchor, base, terms);
          return;
        }
        for (int v : verts) in_part[v] = 1;
        part_subtree_sizes(tree, anchor, verts, in_part, cnt);
        int star = descend(tree, anchor, static_cast<int>(verts.size()), in_part, cnt);

        std::vector<int> part_children;
        for (int c : tree.children(star))
          if (in_part[c]) part_children.push_back(c);

        std::vector<std::vector<int>> child_parts(part_children.size());
        for (std::size_t i = 0; i < part_children.size(); ++i) {
          if (star != anchor) child_parts[i].push_back(star);
          collect(part_children[i], child_parts[i]);
        }

        if (star == anchor) {
          // The anchor itself stays; each child's subtree recurses behind one
          // fresh single-edge record.
          assign(anchor, base, terms);
          for (int v : verts) in_part[v] = 0;
          for (std::size_t i = 0; i < part_children.size(); ++i) {
            int c = part_children[i];
            PrivatizedTree::Record rec{level, anchor, c, true,
                                       tree.parent_edge_attr(c) + sample(spec, rng)};
            out.records_.push_back(rec);
            recurse(child_parts[i], c, base + rec.value, terms + 1, level + 1);
          }
          return;
        }

        // One path record anchor -> star shared by all parts below star; the
        // remainder keeps the anchor and its running sum unchanged.
        PrivatizedTree::Record rec{level, anchor, star, false,
                                   tree.root_attr_distance(star) -
                                       tree.root_attr_distance(anchor) +
                                       sample(spec, rng)};
        out.records_.push_back(rec);
        double child_base = base + rec.value;

        std::vector<int> remainder;
        for (const auto& part : child_parts)
          for (int v : part) below[v] = 1;
        for (int v : verts)
          if (!below[v]) remainder.push_back(v);
        for (const auto& part : child_parts)
          for (int v : part) below[v] = 0;
        for (int v : verts) in_part[v] = 0;

        for (std::size_t i = 0; i < part_children.size(); ++i)
          recurse(child_parts[i], star, child_base, terms + 1, level + 1);
        recurse(remainder, anchor, base, terms, level + 1);
      };

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  recurse(all, tree.root(), 0.0, 0, 0);
  return out;
}

}  // namespace spq
