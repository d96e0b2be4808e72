#pragma once

#include <string>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow {

struct HitsOptions {
  double tolerance = 1e-9;
  int max_iterations = 1000;
};

/// Hub and authority vectors indexed by node id. Excluded nodes of the
/// input view carry 0 in both.
struct HitsScores {
  std::vector<double> hub;
  std::vector<double> auth;
  int iterations = 0;
  bool converged = false;
};

/// One authority-then-hub update with Euclidean normalization of each vector.
/// An all-zero vector stays zero.
void hits_sweep(const GraphView& view, std::vector<double>& hub, std::vector<double>& auth);

/// Kleinberg hub/authority iteration from all-ones vectors. Stops once the
/// max-norm change of both vectors falls below the tolerance.
/// Throws DomainError on an empty graph or bad options.
HitsScores compute_hits(const GraphView& view, const HitsOptions& options = {});

/// `page_id<TAB>hub<TAB>auth` lines with 9 significant digits.
std::string dump_hits(const HitsScores& scores);

}  // namespace relflow
