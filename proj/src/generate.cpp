#include "spq/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spq/rng.hpp"

namespace spq {

GraphFamily parse_family(const std::string& name) {
  if (name == "path") return GraphFamily::Path;
  if (name == "grid") return GraphFamily::Grid;
  if (name == "erdos-renyi" || name == "er") return GraphFamily::ErdosRenyi;
  if (name == "random-geometric" || name == "geometric") return GraphFamily::RandomGeometric;
  if (name == "random-tree" || name == "tree") return GraphFamily::RandomTree;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::Path: return "path";
    case GraphFamily::Grid: return "grid";
    case GraphFamily::ErdosRenyi: return "erdos-renyi";
    case GraphFamily::RandomGeometric: return "random-geometric";
    case GraphFamily::RandomTree: return "random-tree";
  }
  throw std::invalid_argument("unknown graph family");
}

namespace {

constexpr int kConnectivityRetries = 200;

double draw_weight(Rng& rng, const GenOptions& opt) {
  return opt.w_min + (opt.w_max - opt.w_min) * (1.0 - rng.next_unit());
}

double draw_attribute(Rng& rng, const GenOptions& opt) {
  double q = static_cast<double>(rng.next_u64() >> 44) / 1048576.0;  // k / 2^20
  return opt.a_min + (opt.a_max - opt.a_min) * q;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<std::pair<int, int>> grid_edges(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r > 1 && n % r != 0) --r;
  int c = n / r;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      int v = i * c + j;
      if (j + 1 < c) edges.emplace_back(v, v + 1);
      if (i + 1 < r) edges.emplace_back(v, v + c);
    }
  }
  return edges;
}

std::vector<std::pair<int, int>> er_edges(int n, Rng& rng) {
  double p = std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return edges;
}

std::vector<std::pair<int, int>> geometric_edges(int n, Rng& rng) {
  double radius = std::sqrt(2.5 * std::log(static_cast<double>(n)) /
                            (3.14159265358979323846 * n));
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.next_unit();
    y[i] = rng.next_unit();
  }
  double r2 = radius * radius;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
    }
  return edges;
}

std::vector<std::pair<int, int>> prufer_tree_edges(int n, Rng& rng) {
  if (n == 2) return {{0, 1}};
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      while (degree[++ptr] != 1) {}
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return edges;
}

}  // namespace

Graph generate_graph(GraphFamily family, int n, std::uint64_t seed,
                     const GenOptions& options) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!(options.w_min >= 0 && options.w_max > options.w_min))
    throw std::invalid_argument("invalid weight range");
  if (!(options.a_min >= 0 && options.a_max > options.a_min))
    throw std::invalid_argument("invalid attribute range");

  Rng root(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int attempt = 0;; ++attempt) {
    Rng attempt_rng = root.substream(static_cast<std::uint64_t>(attempt));
    Rng structure = attempt_rng.substream(0);
    switch (family) {
      case GraphFamily::Path: pairs = path_edges(n); break;
      case GraphFamily::Grid: pairs = grid_edges(n); break;
      case GraphFamily::ErdosRenyi: pairs = er_edges(n, structure); break;
      case GraphFamily::RandomGeometric: pairs = geometric_edges(n, structure); break;
      case GraphFamily::RandomTree: pairs = prufer_tree_edges(n, structure); break;
    }
    if (connected(n, pairs)) {
      Rng values = attempt_rng.substream(1);
      std::vector<Edge> edges;
      edges.reserve(pairs.size());
      for (auto [u, v] : pairs) {
        Edge e;
        e.u = u;
        e.v = v;
        e.weight = draw_weight(values, options);
        e.attribute = draw_attribute(values, options);
        edges.push_back(e);
      }
      return Graph::build(n, std::move(edges));
    }
    if (attempt + 1 >= kConnectivityRetries)
      throw std::runtime_error("could not generate a connected graph");
  }
}

}  // namespace spq
