#include "spq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spq {

Graph Graph::build(int n, std::vector<Edge> edges) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("vertex id out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop edge rejected");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight rejected");
    if (e.attribute < 0) throw std::invalid_argument("negative edge attribute rejected");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge rejected");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.resize(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges_[i];
    g.adj_[e.u].emplace_back(e.v, i);
    g.adj_[e.v].emplace_back(e.u, i);
  }

  // BFS connectivity check.
  std::vector<char> visited(n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adj_[v]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("disconnected graph rejected");
  return g;
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.u)) continue;  // blank or comment-only line
    if (!(ls >> e.v >> e.weight >> e.attribute))
      throw std::invalid_argument("edge list parse error at line " + std::to_string(lineno));
    max_id = std::max({max_id, e.u, e.v});
    edges.push_back(e);
  }
  if (edges.empty()) throw std::invalid_argument("empty edge list");
  return Graph::build(max_id + 1, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# u v weight attribute\n";
  char buf[128];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof(buf), "%d %d %.17g %.17g\n", e.u, e.v, e.weight, e.attribute);
    out << buf;
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_edge_list(g, out);
}

}  // namespace spq
