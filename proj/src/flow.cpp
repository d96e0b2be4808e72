#include "relflow/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>

#include "relflow/subnet.hpp"

namespace relflow {

CapacityMap::CapacityMap(std::vector<double> capacities) : values_(std::move(capacities)) {
  for (double& c : values_) c = std::max(c, 0.0);
}

void CapacityMap::subtract(EdgeId e, double amount) { values_[e] = std::max(values_[e] - amount, 0.0); }

namespace {

// How a node was reached in the residual search.
struct Parent {
  EdgeId edge = 0;
  bool forward = true;
  bool set = false;
};

}  // namespace

FlowResult max_flow(const Digraph& graph, std::span<const double> capacities, PageId source, PageId sink,
                    std::span<const PageId> excluded, std::ostream* trace) {
  const std::size_t n = graph.node_count();
  if (!graph.contains(source) || !graph.contains(sink)) throw DomainError("max_flow: unknown source or sink");
  if (source == sink) throw DomainError("max_flow: source and sink coincide");
  if (capacities.size() != graph.edge_count()) throw DomainError("max_flow: capacity vector size mismatch");

  std::vector<char> hidden(n, 0);
  for (PageId x : excluded) {
    if (!graph.contains(x)) throw DomainError("max_flow: unknown excluded node " + std::to_string(x));
    hidden[x] = 1;
  }
  if (hidden[source] || hidden[sink]) throw DomainError("max_flow: source or sink is excluded");

  FlowResult result;
  result.edge_flows.assign(graph.edge_count(), 0.0);
  auto& flow = result.edge_flows;

  std::vector<Parent> parent(n);
  std::deque<PageId> queue;
  while (true) {
    std::fill(parent.begin(), parent.end(), Parent{});
    parent[source].set = true;
    queue.assign(1, source);
    while (!queue.empty() && !parent[sink].set) {
      PageId x = queue.front();
      queue.pop_front();
      for (EdgeId e : graph.out_edges(x)) {
        PageId y = graph.edge(e).dst;
        if (hidden[y] || parent[y].set || capacities[e] - flow[e] <= kFlowEpsilon) continue;
        parent[y] = {e, true, true};
        queue.push_back(y);
      }
      for (EdgeId e : graph.in_edges(x)) {
        PageId y = graph.edge(e).src;
        if (hidden[y] || parent[y].set || flow[e] <= kFlowEpsilon) continue;
        parent[y] = {e, false, true};
        queue.push_back(y);
      }
    }
    if (!parent[sink].set) break;

    double bottleneck = std::numeric_limits<double>::infinity();
    for (PageId y = sink; y != source;) {
      const Parent& p = parent[y];
      const Edge& edge = graph.edge(p.edge);
      bottleneck = std::min(bottleneck, p.forward ? capacities[p.edge] - flow[p.edge] : flow[p.edge]);
      y = p.forward ? edge.src : edge.dst;
    }
    std::vector<PageId> path;
    for (PageId y = sink; y != source;) {
      const Parent& p = parent[y];
      const Edge& edge = graph.edge(p.edge);
      if (p.forward) {
        flow[p.edge] = std::min(flow[p.edge] + bottleneck, capacities[p.edge]);
      } else {
        flow[p.edge] = std::max(flow[p.edge] - bottleneck, 0.0);
      }
      if (trace) path.push_back(y);
      y = p.forward ? edge.src : edge.dst;
    }
    result.value += bottleneck;
    if (trace) {
      *trace << "augment " << bottleneck << ": " << source;
      for (auto it = path.rbegin(); it != path.rend(); ++it) *trace << " -> " << *it;
      *trace << '\n';
    }
  }
  return result;
}

FlowResult max_flow(const Subnetwork& net, const CapacityMap& capacities, PageId source, PageId sink,
                    std::span<const PageId> excluded, std::ostream* trace) {
  std::vector<PageId> local_excluded;
  for (PageId x : excluded) {
    if (auto id = net.local(x)) local_excluded.push_back(*id);
  }
  return max_flow(net.graph, capacities.values(), net.require_local(source), net.require_local(sink), local_excluded,
                  trace);
}

}  // namespace relflow
