#include "relflow/hits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relflow/text_io.hpp"

namespace relflow {
namespace {

void normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  if (sum == 0.0) return;
  double norm = std::sqrt(sum);
  for (double& x : v) x /= norm;
}

double max_change(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

void hits_sweep(const GraphView& view, std::vector<double>& hub, std::vector<double>& auth) {
  const std::size_t n = view.base().node_count();
  std::vector<double> next_auth(n, 0.0);
  for (PageId x = 0; x < n; ++x) {
    if (view.is_excluded(x)) continue;
    for (PageId y : view.in_neighbors(x)) next_auth[x] += hub[y];
  }
  normalize(next_auth);

  std::vector<double> next_hub(n, 0.0);
  for (PageId x = 0; x < n; ++x) {
    if (view.is_excluded(x)) continue;
    for (PageId y : view.out_neighbors(x)) next_hub[x] += next_auth[y];
  }
  normalize(next_hub);

  auth = std::move(next_auth);
  hub = std::move(next_hub);
}

HitsScores compute_hits(const GraphView& view, const HitsOptions& options) {
  const std::size_t n = view.base().node_count();
  if (n == 0 || view.excluded().size() >= n) throw DomainError("HITS needs a non-empty graph");
  if (!(options.tolerance > 0.0)) throw DomainError("HITS tolerance must be positive");
  if (options.max_iterations < 1) throw DomainError("HITS needs at least one iteration");

  HitsScores scores;
  scores.hub.assign(n, 0.0);
  scores.auth.assign(n, 0.0);
  for (PageId x = 0; x < n; ++x) {
    if (!view.is_excluded(x)) scores.hub[x] = scores.auth[x] = 1.0;
  }
  normalize(scores.hub);
  normalize(scores.auth);

  while (scores.iterations < options.max_iterations) {
    auto prev_hub = scores.hub;
    auto prev_auth = scores.auth;
    hits_sweep(view, scores.hub, scores.auth);
    ++scores.iterations;
    if (max_change(prev_hub, scores.hub) < options.tolerance &&
        max_change(prev_auth, scores.auth) < options.tolerance) {
      scores.converged = true;
      break;
    }
    // Edgeless graphs collapse to zero on the first sweep.
    if (std::all_of(scores.hub.begin(), scores.hub.end(), [](double h) { return h == 0.0; }) &&
        std::all_of(scores.auth.begin(), scores.auth.end(), [](double a) { return a == 0.0; })) {
      scores.converged = true;
      break;
    }
  }
  return scores;
}

std::string dump_hits(const HitsScores& scores) {
  std::ostringstream out;
  for (std::size_t x = 0; x < scores.hub.size(); ++x) {
    out << x << '\t' << text::format_sig(scores.hub[x], 9) << '\t' << text::format_sig(scores.auth[x], 9) << '\n';
  }
  return out.str();
}

}  // namespace relflow
