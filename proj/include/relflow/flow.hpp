#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow {

struct Subnetwork;

/// Capacities at or below this are treated as exhausted.
inline constexpr double kFlowEpsilon = 1e-12;

/// Working copy of a network's edge capacities for one scoring job.
/// Entries never go negative: subtraction clamps at zero.
class CapacityMap {
 public:
  CapacityMap() = default;
  explicit CapacityMap(std::vector<double> capacities);

  double operator[](EdgeId e) const { return values_[e]; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

  /// c(e) <- max(c(e) - amount, 0)
  void subtract(EdgeId e, double amount);

 private:
  std::vector<double> values_;
};

struct FlowResult {
  double value = 0.0;
  /// Flow on each edge, indexed by EdgeId.
  std::vector<double> edge_flows;
};

/// Maximum source-to-sink flow in `graph` with `excluded` nodes removed.
///
/// Shortest augmenting paths (Edmonds-Karp); the residual search visits
/// forward arcs in EdgeId order, then backward arcs in in-edge order, so the
/// edge-level flow is a deterministic function of the inputs. Throws
/// DomainError when source == sink, either is unknown or excluded, or the
/// capacity vector does not match the edge count. `trace`, if set, receives
/// one line per augmenting path.
FlowResult max_flow(const Digraph& graph, std::span<const double> capacities, PageId source, PageId sink,
                    std::span<const PageId> excluded = {}, std::ostream* trace = nullptr);

/// Same, addressed by page ids of a keyword network.
FlowResult max_flow(const Subnetwork& net, const CapacityMap& capacities, PageId source, PageId sink,
                    std::span<const PageId> excluded = {}, std::ostream* trace = nullptr);

}  // namespace relflow
