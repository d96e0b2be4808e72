#pragma once

// Shared test fixtures: the 7-node toy network and random graph generators.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "relflow/graph.hpp"
#include "relflow/subnet.hpp"
#include "relflow/webgraph.hpp"

namespace relflow::testing {

// Edge set of the toy network used throughout the scoring tables.
inline std::vector<Edge> toy7_edges() {
  return {{0, 2}, {0, 5}, {1, 3}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}};
}

inline Digraph toy7_graph() { return Digraph(7, toy7_edges()); }

inline std::vector<std::string> numbered_urls(std::size_t n, const std::string& prefix = "http://toy.example/") {
  std::vector<std::string> urls;
  for (std::size_t i = 0; i < n; ++i) urls.push_back(prefix + std::to_string(i));
  return urls;
}

// The toy network as a web snapshot with one keyword covering every page.
inline WebGraph toy7_web() {
  KeywordIndex keywords;
  keywords["toy"] = KeywordEntry{{0, 1, 2, 3, 4, 5, 6}, 1.0};
  return WebGraph(numbered_urls(7), toy7_graph(), std::move(keywords));
}

inline Subnetwork toy7_subnetwork() { return build_subnetwork(toy7_web(), "toy"); }

// Exact normalized HITS hub vector of the toy network (dominant eigenvector
// of A A^T, computed independently with a dense symmetric eigensolver).
inline const std::vector<double>& toy7_exact_hub() {
  static const std::vector<double> hub{0.36816036, 0.25362279, 0.81522474, 0.36816036, 0.0, 0.0, 0.0};
  return hub;
}

// Random simple digraph: each ordered pair (a != b) is an edge with probability p.
inline std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (PageId a = 0; a < n; ++a) {
    for (PageId b = 0; b < n; ++b) {
      if (a != b && coin(rng)) edges.push_back({a, b});
    }
  }
  return edges;
}

inline Digraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  return Digraph(n, random_edges(rng, n, p));
}

// A random web graph whose single keyword covers every page, so its
// subnetwork is the whole graph.
inline WebGraph random_web(std::mt19937_64& rng, std::size_t n, double p) {
  KeywordIndex keywords;
  KeywordEntry all;
  for (PageId x = 0; x < n; ++x) all.pages.push_back(x);
  all.gamma = 1.0;
  keywords["all"] = all;
  return WebGraph(numbered_urls(n, "http://r.example/"), random_graph(rng, n, p), std::move(keywords));
}

// Redundant-witness chain: pages u=0 and v=1 both link only to the near
// witness y=2; y links to `fan_out` far witnesses and heads a chain of
// `chain_length` more. Every path from u or v to a far witness crosses the
// edge into y. Capacities follow the hub values given per page (one per node,
// 3 + fan_out + chain_length of them), so capacity(x -> y) = hub(x) holds.
inline Subnetwork chain_witness_network(std::size_t fan_out, std::size_t chain_length, std::vector<double> hub) {
  const std::size_t n = 3 + fan_out + chain_length;
  std::vector<Edge> edges{{0, 2}, {1, 2}};
  for (std::size_t i = 0; i < fan_out; ++i) edges.push_back({2, PageId(3 + i)});
  PageId prev = 2;
  for (std::size_t i = 0; i < chain_length; ++i) {
    PageId next = PageId(3 + fan_out + i);
    edges.push_back({prev, next});
    prev = next;
  }
  Subnetwork net;
  net.keyword = "chain";
  for (PageId x = 0; x < n; ++x) net.pages.push_back(x);
  net.graph = Digraph(n, std::move(edges));
  net.hub = std::move(hub);
  net.auth.assign(n, 0.0);
  for (EdgeId e = 0; e < net.graph.edge_count(); ++e) {
    net.capacity.push_back(net.hub[net.graph.edge(e).src]);
    net.maxwt = std::max(net.maxwt, net.capacity.back());
  }
  return net;
}

}  // namespace relflow::testing
