#include "relflow/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relflow/text_io.hpp"

namespace relflow {

SimilarityMatrix simrank(const Digraph& graph, double decay, int iterations) {
  if (!(decay > 0.0 && decay <= 1.0)) throw std::invalid_argument("SimRank decay must lie in (0, 1]");
  if (iterations < 1) throw std::invalid_argument("SimRank needs at least one iteration");
  const std::size_t n = graph.node_count();

  SimilarityMatrix current(n);
  for (PageId a = 0; a < n; ++a) current(a, a) = 1.0;

  for (int it = 0; it < iterations; ++it) {
    SimilarityMatrix next(n);
    bool changed = false;
    for (PageId a = 0; a < n; ++a) {
      next(a, a) = 1.0;
      auto in_a = graph.in_edges(a);
      for (PageId b = a + 1; b < n; ++b) {
        auto in_b = graph.in_edges(b);
        double s = 0.0;
        if (!in_a.empty() && !in_b.empty()) {
          for (EdgeId ea : in_a) {
            for (EdgeId eb : in_b) s += current(graph.edge(ea).src, graph.edge(eb).src);
          }
          s *= decay / static_cast<double>(in_a.size() * in_b.size());
        }
        next(a, b) = next(b, a) = s;
        changed = changed || s != current(a, b);
      }
    }
    current = std::move(next);
    if (!changed) break;
  }
  return current;
}

std::vector<double> pagerank(const Digraph& graph, const PageRankOptions& options) {
  const std::size_t n = graph.node_count();
  if (n == 0) return {};
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform);
  for (int it = 0; it < options.max_iterations; ++it) {
    double dangling = 0.0;
    for (PageId x = 0; x < n; ++x) {
      if (graph.out_degree(x) == 0) dangling += rank[x];
    }
    std::vector<double> next(n, (1.0 - options.damping) * uniform + options.damping * dangling * uniform);
    for (PageId x = 0; x < n; ++x) {
      auto out = graph.out_edges(x);
      if (out.empty()) continue;
      double share = options.damping * rank[x] / static_cast<double>(out.size());
      for (EdgeId e : out) next[graph.edge(e).dst] += share;
    }
    double change = 0.0;
    for (PageId x = 0; x < n; ++x) change += std::abs(next[x] - rank[x]);
    rank = std::move(next);
    if (change < options.tolerance) break;
  }
  return rank;
}

namespace {

// Spreads `mass` held at x over its out-links, then onward along simple
// paths for at most `hops_left` more hops.
void propagate(const Digraph& graph, PageId x, double mass, int hops_left, double decay, std::vector<char>& on_path,
               std::vector<double>& received) {
  auto out = graph.out_edges(x);
  if (hops_left == 0 || out.empty()) return;
  const double share = mass * decay / static_cast<double>(out.size());
  on_path[x] = 1;
  for (EdgeId e : out) {
    PageId y = graph.edge(e).dst;
    if (on_path[y]) continue;
    received[y] += share;
    propagate(graph, y, share, hops_left - 1, decay, on_path, received);
  }
  on_path[x] = 0;
}

}  // namespace

SimilarityMatrix pagesim(const Digraph& graph, const PageSimOptions& options) {
  if (options.radius < 1) throw std::invalid_argument("PageSim radius must be at least 1");
  if (!(options.decay > 0.0 && options.decay <= 1.0)) throw std::invalid_argument("PageSim decay must lie in (0, 1]");
  const std::size_t n = graph.node_count();
  const std::vector<double> rank = pagerank(graph, options.pagerank);

  // received[w][v]: score page v holds from source w.
  std::vector<std::vector<double>> received(n, std::vector<double>(n, 0.0));
  std::vector<char> on_path(n, 0);
  for (PageId w = 0; w < n; ++w) {
    received[w][w] = rank[w];
    propagate(graph, w, rank[w], options.radius, options.decay, on_path, received[w]);
  }

  SimilarityMatrix sim(n);
  for (PageId a = 0; a < n; ++a) {
    for (PageId b = a; b < n; ++b) {
      double s = 0.0;
      for (PageId w = 0; w < n; ++w) s += std::min(received[w][a], received[w][b]);
      sim(a, b) = sim(b, a) = s;
    }
  }
  return sim;
}

std::string dump_matrix(const SimilarityMatrix& m) {
  std::ostringstream out;
  for (PageId a = 0; a < m.size(); ++a) {
    for (PageId b = a; b < m.size(); ++b) out << a << '\t' << b << '\t' << text::format_sig(m(a, b), 6) << '\n';
  }
  return out.str();
}

}  // namespace relflow
