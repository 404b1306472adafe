#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "spq/sp_tree.hpp"
#include "spq/tree_priv.hpp"
#include "test_util.hpp"

using spq::Graph;
using spq::PathIndex;
using spq::PrivatizedTree;
using spq::Rng;
using spq::SPTree;

namespace {

Graph chain(int n) {
  std::vector<spq::Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1, 1.0, static_cast<double>(i + 1) / 64.0});
  return Graph::build(n, std::move(edges));
}

SPTree tree_of(const Graph& g, int root) {
  PathIndex index = PathIndex::build(g);
  return SPTree(g, index, root);
}

// tree path attribute sum through the naive LCA, written independently of
// SPTree::lca
double naive_tree_path_attr(const SPTree& t, int u, int v) {
  std::set<int> up;
  for (int x = u;; x = t.parent(x)) {
    up.insert(x);
    if (x == t.root()) break;
  }
  int meet = v;
  while (!up.count(meet)) meet = t.parent(meet);
  double sum = 0;
  for (int x = u; x != meet; x = t.parent(x)) sum += t.parent_edge_attr(x);
  for (int x = v; x != meet; x = t.parent(x)) sum += t.parent_edge_attr(x);
  return sum;
}

}  // namespace

TEST_CASE("partition vertex on the canonical shapes") {
  // star: only the root has more than half the descendants
  Graph star = Graph::build(6, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1},
                                {0, 4, 1, 1}, {0, 5, 1, 1}});
  CHECK(spq::partition_vertex(tree_of(star, 0)) == 0);

  // chain of 4: v1 has 3 descendants >= 2 while its child v2 has 2 <= 2
  CHECK(spq::partition_vertex(tree_of(chain(4), 0)) == 1);

  // two vertices: the root
  CHECK(spq::partition_vertex(tree_of(chain(2), 0)) == 0);

  // restricted part
  SPTree t8 = tree_of(chain(8), 0);
  CHECK(spq::partition_vertex(t8) == 3);
  CHECK(spq::partition_vertex(t8, 3, {3, 4, 5, 6, 7}) == 5);
  CHECK(spq::partition_vertex(t8, 4, {4}) == 4);
  CHECK_THROWS(spq::partition_vertex(t8, 3, {4, 5}));
}

TEST_CASE("record sigma squared formula") {
  double d0 = 1.25 / std::exp(2.0);
  CHECK(spq::tree_record_sigma2(1.0, d0, 10) ==
        doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-12));
  CHECK(spq::tree_record_sigma2(0.5, d0, 10) ==
        doctest::Approx(8.0 * std::log(10.0)).epsilon(1e-12));
  CHECK_THROWS(spq::tree_record_sigma2(0.0, 0.5, 10));
  CHECK_THROWS(spq::tree_record_sigma2(1.0, 1.5, 10));
}

TEST_CASE("single edge, noise off") {
  SPTree t = tree_of(chain(2), 0);
  auto priv = spq::private_tree(t, 1.0, 0.5, Rng(1), false);
  CHECK(priv.root_estimate(1) == t.parent_edge_attr(1));
  CHECK(priv.term_count(1) == 1);
  CHECK(priv.root_estimate(0) == 0.0);
  CHECK(priv.term_count(0) == 0);
}

TEST_CASE("chain of 8, noise off: exact and within four terms") {
  SPTree t = tree_of(chain(8), 0);
  auto priv = spq::private_tree(t, 1.0, 0.5, Rng(1), false);
  int max_terms = 0;
  for (int v = 0; v < 8; ++v) {
    CHECK(priv.root_estimate(v) == t.root_attr_distance(v));
    max_terms = std::max(max_terms, priv.term_count(v));
  }
  CHECK(max_terms <= 4);
}

TEST_CASE("term counts bounded and reconstruction exact on random trees") {
  for (int n : {2, 3, 5, 17, 64, 257, 1024}) {
    Graph g = spq::generate_graph(spq::GraphFamily::RandomTree, n, 50 + n);
    PathIndex index = PathIndex::build(g);
    SPTree t(g, index, 0);
    auto priv = spq::private_tree(t, 1.0, 0.5, Rng(n), false);
    int bound = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    for (int v = 0; v < n; ++v) {
      CHECK(priv.term_count(v) <= bound);
      CHECK(priv.term_count(v) >= 0);
      CHECK(priv.root_estimate(v) == t.root_attr_distance(v));
    }
  }
}

TEST_CASE("records noised at one level are edge-disjoint") {
  Graph g = spq::generate_graph(spq::GraphFamily::RandomTree, 200, 9);
  PathIndex index = PathIndex::build(g);
  SPTree t(g, index, 0);
  auto priv = spq::private_tree(t, 1.0, 0.5, Rng(3), true);
  std::map<int, std::set<int>> edges_by_level;
  for (const auto& rec : priv.records()) {
    // tree edges covered by the record: walk target up to anchor
    std::set<int>& used = edges_by_level[rec.level];
    for (int x = rec.target; x != rec.anchor; x = t.parent(x)) {
      CHECK(used.insert(t.parent_edge(x)).second);
    }
    if (rec.is_edge) CHECK(t.parent(rec.target) == rec.anchor);
  }
}

TEST_CASE("pair estimates combine through the LCA") {
  Graph g = spq::generate_graph(spq::GraphFamily::RandomTree, 60, 4);
  PathIndex index = PathIndex::build(g);
  SPTree t(g, index, 7);
  auto priv = spq::private_tree(t, 1.0, 0.5, Rng(2), false);
  for (int u = 0; u < 60; ++u) {
    CHECK(priv.pair_estimate(t, u, u) == 0.0);
    CHECK(priv.pair_estimate(t, 7, u) == priv.root_estimate(u));
    for (int v = u + 1; v < 60; v += 7)
      CHECK(priv.pair_estimate(t, u, v) ==
            doctest::Approx(naive_tree_path_attr(t, u, v)).epsilon(1e-12));
  }
}

TEST_CASE("noisy records deviate from exact sums but reproduce per seed") {
  SPTree t = tree_of(chain(50), 0);
  auto a = spq::private_tree(t, 0.5, 0.1, Rng(8), true);
  auto b = spq::private_tree(t, 0.5, 0.1, Rng(8), true);
  auto c = spq::private_tree(t, 0.5, 0.1, Rng(9), true);
  bool moved = false, reseeded = false;
  for (int v = 0; v < 50; ++v) {
    CHECK(a.root_estimate(v) == b.root_estimate(v));
    CHECK(a.term_count(v) == c.term_count(v));
    if (a.root_estimate(v) != t.root_attr_distance(v)) moved = true;
    if (a.root_estimate(v) != c.root_estimate(v)) reseeded = true;
  }
  CHECK(moved);
  CHECK(reseeded);
}

TEST_CASE("sp tree mirrors the path index") {
  Graph g = spq::generate_graph(spq::GraphFamily::ErdosRenyi, 30, 21);
  PathIndex index = PathIndex::build(g);
  SPTree t(g, index, 5);
  for (int v = 0; v < 30; ++v) {
    CHECK(t.depth(v) == index.hop(5, v));
    if (v != 5) CHECK(t.parent_edge(v) == index.parent_edge(5, v));
  }
  CHECK_THROWS(SPTree(g, index, -1));
}
