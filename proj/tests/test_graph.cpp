#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "relflow/graph.hpp"

using namespace relflow;
using relflow::testing::random_graph;
using relflow::testing::toy7_graph;

TEST_CASE("digraph sorts and deduplicates edges") {
  Digraph g(4, {{2, 1}, {0, 3}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{2, 1});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  REQUIRE(g.in_edges(1).size() == 2);
  CHECK(g.edge(g.in_edges(1)[0]).src == 0);
  CHECK(g.edge(g.in_edges(1)[1]).src == 2);
}

TEST_CASE("digraph rejects self-loops and dangling endpoints") {
  CHECK_THROWS_AS(Digraph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), DomainError);
}

TEST_CASE("toy network neighbors") {
  Digraph g = toy7_graph();
  GraphView forward(g);
  CHECK(forward.out_neighbors(2) == std::vector<PageId>{3, 5, 6});
  CHECK(forward.reversed().out_neighbors(5) == std::vector<PageId>{0, 2});
  CHECK(forward.out_neighbors(4).empty());
}

TEST_CASE("views hide excluded nodes and reject queries on them") {
  Digraph g = toy7_graph();
  GraphView view = GraphView(g).without(3);
  CHECK(view.out_neighbors(2) == std::vector<PageId>{5, 6});
  CHECK(view.in_neighbors(6) == std::vector<PageId>{2});
  CHECK_THROWS_AS(view.out_neighbors(3), DomainError);
  CHECK_THROWS_AS(view.out_neighbors(7), DomainError);
}

TEST_CASE("reversal properties on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 50;
    Digraph g = random_graph(rng, n, 0.1);
    GraphView forward(g);
    GraphView twice = forward.reversed().reversed();
    PageId hidden = static_cast<PageId>(rng() % n);
    GraphView pruned = forward.without(hidden);
    for (PageId x = 0; x < n; ++x) {
      CHECK(twice.out_neighbors(x) == forward.out_neighbors(x));
      CHECK(forward.reversed().out_neighbors(x) == forward.in_neighbors(x));
      if (x == hidden) continue;
      for (PageId y : pruned.out_neighbors(x)) CHECK(y != hidden);
      for (PageId y : pruned.reversed().out_neighbors(x)) CHECK(y != hidden);
    }
  }
}
