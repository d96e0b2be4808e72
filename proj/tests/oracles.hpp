#pragma once

// Independent reference computations. Nothing here calls into the library's
// flow, BFS, or HITS code paths.

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <span>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow::testing {

// Minimum s-t cut by enumerating every subset of the non-terminal,
// non-excluded nodes placed on the source side. Excluded nodes and their
// edges are ignored entirely.
inline double brute_force_min_cut(std::size_t n, std::span<const Edge> edges, std::span<const double> capacity,
                                  PageId source, PageId sink, std::span<const PageId> excluded = {}) {
  std::vector<char> hidden(n, 0);
  for (PageId x : excluded) hidden[x] = 1;
  std::vector<PageId> free_nodes;
  for (PageId x = 0; x < n; ++x) {
    if (x != source && x != sink && !hidden[x]) free_nodes.push_back(x);
  }
  double best = std::numeric_limits<double>::infinity();
  const std::size_t subsets = std::size_t{1} << free_nodes.size();
  std::vector<char> source_side(n);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::fill(source_side.begin(), source_side.end(), 0);
    source_side[source] = 1;
    for (std::size_t i = 0; i < free_nodes.size(); ++i) {
      if (mask >> i & 1) source_side[free_nodes[i]] = 1;
    }
    double cut = 0.0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& edge = edges[e];
      if (hidden[edge.src] || hidden[edge.dst]) continue;
      if (source_side[edge.src] && !source_side[edge.dst]) cut += capacity[e];
    }
    best = std::min(best, cut);
  }
  return best;
}

// Plain hop-count BFS over an edge list, following edges forward or backward.
inline std::vector<int> reference_hops(std::size_t n, std::span<const Edge> edges, PageId start, bool backward) {
  std::vector<int> hops(n, -1);
  hops[start] = 0;
  std::deque<PageId> queue{start};
  while (!queue.empty()) {
    PageId x = queue.front();
    queue.pop_front();
    for (const Edge& e : edges) {
      PageId from = backward ? e.dst : e.src;
      PageId to = backward ? e.src : e.dst;
      if (from == x && hops[to] == -1) {
        hops[to] = hops[x] + 1;
        queue.push_back(to);
      }
    }
  }
  return hops;
}

}  // namespace relflow::testing
