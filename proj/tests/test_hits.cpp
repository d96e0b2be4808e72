#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "relflow/hits.hpp"

using namespace relflow;

namespace {

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_shape(const Digraph& g, const std::vector<double>& hub, const std::vector<double>& auth) {
  for (double x : hub) CHECK(x >= 0.0);
  for (double x : auth) CHECK(x >= 0.0);
  double nh = norm(hub), na = norm(auth);
  CHECK((nh == 0.0 || std::abs(nh - 1.0) < 1e-12));
  CHECK((na == 0.0 || std::abs(na - 1.0) < 1e-12));
  for (PageId x = 0; x < g.node_count(); ++x) {
    if (g.out_degree(x) == 0) CHECK(hub[x] == 0.0);
    if (g.in_degree(x) == 0) CHECK(auth[x] == 0.0);
  }
}

}  // namespace

TEST_CASE("toy network hub values") {
  Digraph g = relflow::testing::toy7_graph();
  HitsScores s = compute_hits(GraphView(g));
  CHECK(s.converged);
  const auto& expected = relflow::testing::toy7_exact_hub();
  for (PageId x = 0; x < 7; ++x) CHECK(s.hub[x] == doctest::Approx(expected[x]).epsilon(1e-6));
}

TEST_CASE("single edge") {
  Digraph g(2, {{0, 1}});
  HitsScores s = compute_hits(GraphView(g));
  CHECK(s.hub == std::vector<double>{1.0, 0.0});
  CHECK(s.auth == std::vector<double>{0.0, 1.0});
}

TEST_CASE("edgeless graph collapses to zero after one sweep") {
  Digraph g(3, {});
  HitsScores s = compute_hits(GraphView(g));
  CHECK(s.converged);
  CHECK(s.iterations == 1);
  CHECK(s.hub == std::vector<double>(3, 0.0));
  CHECK(s.auth == std::vector<double>(3, 0.0));
}

TEST_CASE("bad inputs") {
  Digraph empty(0, {});
  CHECK_THROWS_AS(compute_hits(GraphView(empty)), DomainError);
  Digraph g = relflow::testing::toy7_graph();
  CHECK_THROWS_AS(compute_hits(GraphView(g), {0.0, 10}), DomainError);
  CHECK_THROWS_AS(compute_hits(GraphView(g), {1e-9, 0}), DomainError);
}

TEST_CASE("iteration cap is reported as not converged") {
  Digraph g = relflow::testing::toy7_graph();
  HitsScores s = compute_hits(GraphView(g), {1e-15, 2});
  CHECK(s.iterations == 2);
  CHECK_FALSE(s.converged);
}

TEST_CASE("norm and sign invariants hold after every sweep") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 50;
    Digraph g = relflow::testing::random_graph(rng, n, 0.08);
    GraphView view(g);
    std::vector<double> hub(n, 1.0 / std::sqrt(double(n))), auth = hub;
    for (int sweep = 0; sweep < 5; ++sweep) {
      hits_sweep(view, hub, auth);
      check_shape(g, hub, auth);
    }
    HitsScores s = compute_hits(view);
    check_shape(g, s.hub, s.auth);
  }
}

TEST_CASE("converged result is a fixed point") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 48;
    Digraph g = relflow::testing::random_graph(rng, n, 0.1);
    HitsOptions options{1e-9, 5000};
    HitsScores s = compute_hits(GraphView(g), options);
    if (!s.converged) continue;
    ++checked;
    auto hub = s.hub, auth = s.auth;
    hits_sweep(GraphView(g), hub, auth);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(std::abs(hub[x] - s.hub[x]) <= options.tolerance);
      CHECK(std::abs(auth[x] - s.auth[x]) <= options.tolerance);
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("duplicating the graph leaves per-component values unchanged") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 20;
    auto edges = relflow::testing::random_edges(rng, n, 0.2);
    std::vector<Edge> doubled = edges;
    for (const Edge& e : edges) doubled.push_back({e.src + PageId(n), e.dst + PageId(n)});
    HitsScores once = compute_hits(GraphView(Digraph(n, edges)), {1e-12, 5000});
    HitsScores twice = compute_hits(GraphView(Digraph(2 * n, doubled)), {1e-12, 5000});
    if (!once.converged || !twice.converged) continue;
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(twice.hub[x] * std::sqrt(2.0) == doctest::Approx(once.hub[x]).epsilon(1e-6));
      CHECK(twice.hub[x + n] == doctest::Approx(twice.hub[x]).epsilon(1e-9));
      CHECK(twice.auth[x] * std::sqrt(2.0) == doctest::Approx(once.auth[x]).epsilon(1e-6));
    }
  }
}

TEST_CASE("dump format") {
  HitsScores s = compute_hits(GraphView(Digraph(2, {{0, 1}})));
  CHECK(dump_hits(s) == "0\t1\t0\n1\t0\t1\n");
}
