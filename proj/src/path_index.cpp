#include "spq/path_index.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace spq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

PathIndex PathIndex::build(const Graph& g) {
  PathIndex index;
  const int n = g.vertex_count();
  index.n_ = n;
  index.dist_.assign(static_cast<std::size_t>(n) * n, kInf);
  index.parent_edge_.assign(static_cast<std::size_t>(n) * n, -1);
  index.hop_.assign(static_cast<std::size_t>(n) * n, 0);

  std::vector<int> seq_a, seq_b;
  for (int s = 0; s < n; ++s) {
    double* dist = &index.dist_[static_cast<std::size_t>(s) * n];
    int* pe = &index.parent_edge_[static_cast<std::size_t>(s) * n];
    int* hop = &index.hop_[static_cast<std::size_t>(s) * n];
    dist[s] = 0.0;

    // Sorted edge-index sequence of the current tentative path s -> v.
    auto path_seq = [&](int v, std::vector<int>& out) {
      out.clear();
      for (int x = v; x != s;) {
        int e = pe[x];
        out.push_back(e);
        x = g.other_endpoint(e, x);
      }
      std::sort(out.begin(), out.end());
    };

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;  // stale
      for (auto [v, e] : g.neighbors(u)) {
        double cand = dist[u] + g.edge(e).weight;
        if (cand > dist[v]) continue;
        bool better = cand < dist[v];
        if (!better) {
          // Equal weight: lexicographic tie-break on sorted edge indices.
          path_seq(u, seq_a);
          seq_a.insert(std::lower_bound(seq_a.begin(), seq_a.end(), e), e);
          path_seq(v, seq_b);
          better = seq_a < seq_b;
        }
        if (better) {
          dist[v] = cand;
          pe[v] = e;
          hop[v] = hop[u] + 1;
          heap.emplace(cand, v);
        }
      }
    }
  }
  return index;
}

int PathIndex::parent(const Graph& g, int root, int v) const {
  if (v == root) return root;
  return g.other_endpoint(parent_edge_[idx(root, v)], v);
}

AugDist PathIndex::aug_distance(const Graph& g, int u, int v) const {
  AugDist a;
  a.weight = distance(u, v);
  a.tiebreak = path_edges(g, u, v);
  std::sort(a.tiebreak.begin(), a.tiebreak.end());
  return a;
}

std::vector<int> PathIndex::path_edges(const Graph& g, int u, int v) const {
  std::vector<int> edges;
  edges.reserve(hop(u, v));
  for (int x = v; x != u;) {
    int e = parent_edge_[idx(u, x)];
    edges.push_back(e);
    x = g.other_endpoint(e, x);
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

std::vector<int> PathIndex::path_vertices(const Graph& g, int u, int v) const {
  std::vector<int> verts;
  verts.reserve(hop(u, v) + 1);
  for (int x = v; x != u;) {
    verts.push_back(x);
    x = g.other_endpoint(parent_edge_[idx(u, x)], x);
  }
  verts.push_back(u);
  std::reverse(verts.begin(), verts.end());
  return verts;
}

std::optional<std::pair<int, int>> PathIndex::first_last_on_path(
    const Graph& g, int u, int v, const std::vector<char>& in_set, int* count_out) const {
  int count = 0, first = -1, last = -1;
  for (int w : path_vertices(g, u, v)) {
    if (in_set[w]) {
      ++count;
      if (first < 0) first = w;
      last = w;
    }
  }
  if (count_out) *count_out = count;
  if (count < 2) return std::nullopt;
  return std::make_pair(first, last);
}

}  // namespace spq
