#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "curling/graph.hpp"

using curling::Graph;

namespace {

std::vector<int> degrees(const Graph& g) { return curling::degree_sequence(g); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> es;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return {n, es};
}

}  // namespace

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  const std::vector<std::pair<int, int>> loop = {{0, 0}};
  CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
  const std::vector<std::pair<int, int>> dup = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(2, dup), std::invalid_argument);
  const std::vector<std::pair<int, int>> oob = {{0, 2}};
  CHECK_THROWS_AS(Graph(2, oob), std::invalid_argument);
  CHECK(Graph(0).order() == 0);
  CHECK(Graph(3).size() == 0);
}

TEST_CASE("neighbor lists are sorted and symmetric") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 12, 0.4);
    std::int64_t twice = 0;
    for (int u = 0; u < g.order(); ++u) {
      const auto& nb = g.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(g.degree(u) == static_cast<int>(nb.size()));
      twice += g.degree(u);
      for (int v : nb) CHECK(g.adjacent(v, u));
    }
    CHECK(twice == 2 * g.size());  // handshake
  }
}

TEST_CASE("generator shapes") {
  CHECK(degrees(curling::path(5)) == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(degrees(curling::path(1)) == std::vector<int>{0});
  CHECK(degrees(curling::cycle(6)) == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(degrees(curling::complete(5)) == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(degrees(curling::complete_bipartite(2, 3)) == std::vector<int>{2, 2, 2, 3, 3});
  CHECK(degrees(curling::wheel(6)) == std::vector<int>{3, 3, 3, 3, 3, 5});
  CHECK(degrees(curling::ladder(4)) == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3});
  CHECK(degrees(curling::tadpole(3, 2)) == std::vector<int>{1, 2, 2, 2, 3});
  CHECK(degrees(curling::complete_kary_tree(2, 2)) ==
        std::vector<int>{1, 1, 1, 1, 2, 3, 3});
  CHECK(degrees(curling::complete_kary_tree(3, 0)) == std::vector<int>{0});
  const std::vector<int> leaves = {1, 0, 2, 1};
  CHECK(degrees(curling::caterpillar(leaves)) ==
        std::vector<int>{1, 1, 1, 1, 2, 2, 2, 4});
}

TEST_CASE("generator guards") {
  CHECK_THROWS_AS(curling::path(0), std::invalid_argument);
  CHECK_THROWS_AS(curling::cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(curling::complete(0), std::invalid_argument);
  CHECK_THROWS_AS(curling::complete_bipartite(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(curling::wheel(3), std::invalid_argument);
  CHECK_THROWS_AS(curling::ladder(1), std::invalid_argument);
  CHECK_THROWS_AS(curling::tadpole(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(curling::tadpole(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(curling::complete_kary_tree(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(curling::complete_kary_tree(2, -1), std::invalid_argument);
  const std::vector<int> empty;
  CHECK_THROWS_AS(curling::caterpillar(empty), std::invalid_argument);
  const std::vector<int> negative = {1, -1};
  CHECK_THROWS_AS(curling::caterpillar(negative), std::invalid_argument);
}

TEST_CASE("wheel on four vertices is the complete graph") {
  CHECK(curling::wheel(4) == curling::complete(4));
}

TEST_CASE("the two-rung ladder is a four-cycle") {
  const Graph l2 = curling::ladder(2);
  CHECK(l2.order() == 4);
  CHECK(l2.size() == 4);
  CHECK(curling::is_regular(l2));
  CHECK(curling::diameter(l2) == 2);
}

TEST_CASE("tadpole is a cycle plus a pendant path") {
  const Graph t = curling::tadpole(5, 3);
  CHECK(t.order() == 8);
  CHECK(t.size() == 8);  // 5 cycle edges + 2 path edges + bridge
  CHECK(curling::is_connected(t));
  CHECK(t.adjacent(0, 5));  // the bridge
}

TEST_CASE("complete k-ary tree uses heap numbering") {
  const Graph t = curling::complete_kary_tree(3, 2);
  CHECK(t.order() == 13);  // 1 + 3 + 9
  CHECK(t.size() == 12);
  CHECK(t.adjacent(0, 1));
  CHECK(t.adjacent(0, 3));
  CHECK(t.adjacent(1, 4));  // children of v are kv+1..kv+k
  CHECK(t.adjacent(1, 6));
  CHECK(!t.adjacent(0, 4));
  CHECK(curling::is_connected(t));
}

TEST_CASE("distance matrix, diameter, connectivity") {
  const Graph p7 = curling::path(7);
  CHECK(curling::diameter(p7) == 6);
  CHECK(curling::diameter(curling::cycle(9)) == 4);
  CHECK(curling::diameter(curling::complete(5)) == 1);
  CHECK(curling::diameter(curling::path(1)) == 0);
  CHECK(curling::diameter(Graph(0)) == 0);
  CHECK(curling::diameter(curling::tadpole(6, 2)) == 5);

  const std::vector<Graph> parts = {curling::path(3), curling::cycle(3)};
  const Graph split = curling::disjoint_union(parts);
  CHECK(!curling::diameter(split).has_value());
  CHECK(!curling::is_connected(split));
  const curling::DistanceMatrix dm = curling::all_pairs_distances(split);
  CHECK(dm.at(0, 3) == -1);
  CHECK(dm.at(0, 2) == 2);
}

TEST_CASE("parallel all-pairs distances equal the serial reference") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(rng, 30, 0.15);
    const curling::DistanceMatrix a = curling::all_pairs_distances(g);
    const curling::DistanceMatrix b = curling::all_pairs_distances_serial(g);
    REQUIRE(a.n == b.n);
    REQUIRE(a.d == b.d);
  }
}

TEST_CASE("graph powers") {
  const Graph p6 = curling::path(6);
  CHECK(curling::power(p6, 1) == p6);
  CHECK(curling::power(p6, 5) == curling::complete(6));
  CHECK(curling::power(p6, 50) == curling::complete(6));
  CHECK(curling::power(curling::cycle(6), 3) == curling::complete(6));
  CHECK_THROWS_AS(curling::power(p6, 0), std::invalid_argument);

  CHECK(degrees(curling::power(curling::cycle(6), 2)) ==
        std::vector<int>{4, 4, 4, 4, 4, 4});
  CHECK(degrees(curling::power(p6, 2)) == std::vector<int>{2, 2, 3, 3, 4, 4});

  // a power of a disconnected graph completes each component separately
  const std::vector<Graph> parts = {curling::path(3), curling::path(2)};
  const Graph split_pow = curling::power(curling::disjoint_union(parts), 10);
  CHECK(split_pow.adjacent(0, 2));
  CHECK(!split_pow.adjacent(0, 3));
  CHECK(!curling::is_complete(split_pow));

  // edge sets only grow with r
  std::mt19937_64 rng(31);
  const Graph g = random_graph(rng, 14, 0.2);
  std::int64_t last = g.size();
  for (int r = 1; r <= 6; ++r) {
    const std::int64_t now = curling::power(g, r).size();
    CHECK(now >= last);
    last = now;
  }
}

TEST_CASE("products, joins, coronas, unions") {
  const Graph lad = curling::cartesian_product(curling::path(4), curling::path(2));
  CHECK(lad == curling::ladder(4));
  CHECK(lad.order() == 8);
  CHECK(lad.size() == 4 * 1 + 2 * 3);

  CHECK(curling::join(curling::complete(1), curling::complete(1)) ==
        curling::complete(2));
  CHECK(curling::join(curling::cycle(3), curling::complete(1)) == curling::wheel(4));

  const Graph crown = curling::corona_k1(curling::cycle(3));
  CHECK(crown.order() == 6);
  CHECK(crown.size() == 6);
  CHECK(degrees(crown) == std::vector<int>{1, 1, 1, 3, 3, 3});
  CHECK(crown.adjacent(0, 3));  // leaf for u sits at n + u

  const std::vector<Graph> parts = {curling::complete(3), curling::path(4),
                                    curling::cycle(5)};
  const Graph u = curling::disjoint_union(parts);
  CHECK(u.order() == 12);
  CHECK(u.size() == 3 + 3 + 5);
  CHECK(u.adjacent(0, 1));
  CHECK(!u.adjacent(2, 3));
  CHECK(u.adjacent(7, 11));  // cycle ids shifted by 7, wrap edge is (0,4)
}

TEST_CASE("regularity and completeness predicates") {
  CHECK(curling::is_regular(curling::cycle(7)));
  CHECK(curling::is_regular(curling::complete(4)));
  CHECK(!curling::is_regular(curling::path(3)));
  CHECK(curling::is_complete(curling::complete(6)));
  CHECK(!curling::is_complete(curling::cycle(4)));
  CHECK(curling::is_complete(curling::complete(1)));
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 10, 0.3);
    std::stringstream ss;
    curling::write_edge_list(g, ss);
    CHECK(curling::read_edge_list(ss) == g);
  }
  std::stringstream empty_graph("0 0\n");
  CHECK(curling::read_edge_list(empty_graph).order() == 0);
}

TEST_CASE("edge list rejects malformed input") {
  std::stringstream no_header("oops");
  CHECK_THROWS_AS(curling::read_edge_list(no_header), std::runtime_error);
  std::stringstream negative("-2 0\n");
  CHECK_THROWS_AS(curling::read_edge_list(negative), std::runtime_error);
  std::stringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(curling::read_edge_list(short_list), std::runtime_error);
  std::stringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(curling::read_edge_list(loop), std::runtime_error);
  std::stringstream oob("2 1\n0 5\n");
  CHECK_THROWS_AS(curling::read_edge_list(oob), std::runtime_error);
}
