#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spq {

/// Undirected edge. `weight` is public and defines shortest paths; `attribute`
/// is the private query payload and never influences routing.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
  double attribute = 0.0;
};

/// Immutable undirected graph. Connected, no self-loops, at most one edge per
/// vertex pair, weights and attributes nonnegative. Edge indices are stable
/// and follow input order.
class Graph {
 public:
  /// Validates and builds. Throws std::invalid_argument with a distinct
  /// message for: self-loop, duplicate edge, negative weight, negative
  /// attribute, vertex id out of range, disconnected graph.
  static Graph build(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// (neighbor vertex, edge index) pairs incident to v.
  std::span<const std::pair<int, int>> neighbors(int v) const {
    return {adj_[v].data(), adj_[v].size()};
  }

  /// Endpoint of edge e opposite to v.
  int other_endpoint(int e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Edge-list text format: one `u v weight attribute` per line, 0-based ids,
/// `#` starts a comment. Vertex count is inferred as max id + 1.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace spq
