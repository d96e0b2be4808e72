#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow {

/// Dense n x n matrix of pairwise similarities.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(PageId a, PageId b) const { return values_[a * n_ + b]; }
  double& operator()(PageId a, PageId b) { return values_[a * n_ + b]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// SimRank: s(a,a) = 1 and s(a,b) = decay / (|I(a)| |I(b)|) * sum of s over
/// in-neighbor pairs, 0 when either in-neighborhood is empty. Runs
/// `iterations` sweeps from the identity (stopping early once a sweep
/// changes nothing). Throws std::invalid_argument on bad parameters.
SimilarityMatrix simrank(const Digraph& graph, double decay = 1.0, int iterations = 20);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-12;
  int max_iterations = 1000;
};

/// Power-iteration PageRank; dangling mass is spread uniformly. Sums to 1.
std::vector<double> pagerank(const Digraph& graph, const PageRankOptions& options = {});

struct PageSimOptions {
  PageRankOptions pagerank;
  /// Multiplier applied per hop of propagation.
  double decay = 0.8;
  /// Longest propagation path, in hops.
  int radius = 3;
};

/// PageSim: every page w spreads its PageRank along simple out-link paths of
/// at most `radius` hops, splitting evenly over out-links and decaying per
/// hop, giving a score vector per page (with its own PageRank at w itself).
/// Similarity is the sum over sources of the smaller of the two pages'
/// received scores.
SimilarityMatrix pagesim(const Digraph& graph, const PageSimOptions& options = {});

/// Upper triangle including the diagonal: `a<TAB>b<TAB>score`, a <= b, 6 significant digits.
std::string dump_matrix(const SimilarityMatrix& m);

}  // namespace relflow
