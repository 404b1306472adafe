#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "spq/graph.hpp"
#include "spq/path_index.hpp"
#include "test_util.hpp"

using spq::Edge;
using spq::Graph;
using spq::PathIndex;

TEST_CASE("graph validation rejects each malformed input distinctly") {
  CHECK_THROWS_WITH(Graph::build(3, {{0, 0, 1, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}}),
                    "self-loop edge rejected");
  CHECK_THROWS_WITH(Graph::build(3, {{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 1, 1}}),
                    "duplicate edge rejected");
  CHECK_THROWS_WITH(Graph::build(2, {{0, 1, -1, 1}}), "negative edge weight rejected");
  CHECK_THROWS_WITH(Graph::build(2, {{0, 1, 1, -1}}), "negative edge attribute rejected");
  CHECK_THROWS_WITH(Graph::build(2, {{0, 3, 1, 1}}), "vertex id out of range");
  CHECK_THROWS_WITH(Graph::build(4, {{0, 1, 1, 1}, {2, 3, 1, 1}}),
                    "disconnected graph rejected");
}

TEST_CASE("edge-list round trip with comments and inferred vertex count") {
  std::istringstream in(
      "# header comment\n"
      "0 1 0.5 0.25   # trailing comment\n"
      "\n"
      "1 2 1.5 0.75\n");
  Graph g = spq::read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(1).weight == 1.5);

  std::ostringstream out;
  spq::write_edge_list(g, out);
  std::istringstream back(out.str());
  Graph h = spq::read_edge_list(back);
  REQUIRE(h.edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(h.edge(e).u == g.edge(e).u);
    CHECK(h.edge(e).v == g.edge(e).v);
    CHECK(h.edge(e).weight == g.edge(e).weight);
    CHECK(h.edge(e).attribute == g.edge(e).attribute);
  }
}

TEST_CASE("distances match Floyd-Warshall on random graphs") {
  for (int seed = 0; seed < 12; ++seed) {
    int n = 10 + 3 * seed;
    Graph g = spq::generate_graph(testutil::mixed_family(seed), n, 100 + seed);
    PathIndex index = PathIndex::build(g);
    auto fw = testutil::floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        CHECK(index.distance(u, v) == doctest::Approx(fw[u][v]).epsilon(1e-12));
  }
}

TEST_CASE("paths match exhaustive enumeration on tiny graphs") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = spq::generate_graph(testutil::mixed_family(seed), 9, 500 + seed);
    PathIndex index = PathIndex::build(g);
    for (int u = 0; u < 9; ++u) {
      for (int v = 0; v < 9; ++v) {
        if (u == v) continue;
        auto best = testutil::enumerate_best_path(g, u, v);
        CHECK(index.path_edges(g, u, v) == best.edge_seq);
        auto aug = index.aug_distance(g, u, v);
        CHECK(aug.weight == doctest::Approx(best.weight).epsilon(1e-12));
        CHECK(aug.tiebreak == best.sorted_edges);
      }
    }
  }
}

TEST_CASE("tie-break picks a unique path under equal weights") {
  // 4-cycle with all weights equal: two candidate paths between opposite
  // corners; the sorted-edge-lex rule must pick the one through edge 0.
  Graph g = Graph::build(4, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {3, 0, 1, 1}});
  PathIndex index = PathIndex::build(g);
  CHECK(index.path_edges(g, 0, 2) == std::vector<int>{0, 1});
  CHECK(index.path_edges(g, 2, 0) == std::vector<int>{1, 0});
  CHECK(index.distance(0, 2) == 2.0);
}

TEST_CASE("subpath consistency: prefixes of shortest paths are shortest paths") {
  for (int seed = 0; seed < 8; ++seed) {
    int n = 16;
    Graph g = spq::generate_graph(testutil::mixed_family(seed), n, 900 + seed);
    PathIndex index = PathIndex::build(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        auto verts = index.path_vertices(g, u, v);
        auto edges = index.path_edges(g, u, v);
        REQUIRE(verts.size() == edges.size() + 1);
        CHECK(static_cast<int>(edges.size()) == index.hop(u, v));
        for (std::size_t k = 0; k < verts.size(); ++k) {
          int w = verts[k];
          std::vector<int> prefix(edges.begin(), edges.begin() + k);
          CHECK(index.path_edges(g, u, w) == prefix);
        }
      }
    }
  }
}

TEST_CASE("first_last_on_path scans in path order") {
  Graph g = spq::generate_graph(spq::GraphFamily::Path, 8, 1);
  PathIndex index = PathIndex::build(g);
  std::vector<char> in_set(8, 0);
  in_set[2] = in_set[5] = 1;
  int count = 0;
  auto fl = index.first_last_on_path(g, 0, 7, in_set, &count);
  REQUIRE(fl.has_value());
  CHECK(fl->first == 2);
  CHECK(fl->second == 5);
  CHECK(count == 2);
  CHECK_FALSE(index.first_last_on_path(g, 0, 4, in_set, &count).has_value());
  CHECK(count == 1);
  auto rev = index.first_last_on_path(g, 7, 0, in_set);
  REQUIRE(rev.has_value());
  CHECK(rev->first == 5);
}

TEST_CASE("symmetry of distances and reversed paths") {
  Graph g = spq::generate_graph(spq::GraphFamily::ErdosRenyi, 24, 77);
  PathIndex index = PathIndex::build(g);
  for (int u = 0; u < 24; ++u)
    for (int v = u + 1; v < 24; ++v) {
      CHECK(index.distance(u, v) == index.distance(v, u));
      auto fwd = index.path_edges(g, u, v);
      auto bwd = index.path_edges(g, v, u);
      std::reverse(bwd.begin(), bwd.end());
      CHECK(fwd == bwd);
    }
}
