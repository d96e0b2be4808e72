#include "relflow/witness.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "relflow/subnet.hpp"

namespace relflow {

std::vector<int> bounded_bfs(const GraphView& view, PageId start, int depth) {
  std::vector<int> hops(view.base().node_count(), -1);
  hops[start] = 0;
  std::deque<PageId> queue{start};
  while (!queue.empty()) {
    PageId x = queue.front();
    queue.pop_front();
    if (hops[x] == depth) continue;
    for (PageId y : view.out_neighbors(x)) {
      if (hops[y] != -1) continue;
      hops[y] = hops[x] + 1;
      queue.push_back(y);
    }
  }
  return hops;
}

namespace {

WitnessList witness_list(const Subnetwork& net, int depth, PageId u, PageId v, WitnessKind kind) {
  if (depth < 1) throw DomainError("witness search depth must be at least 1");
  if (u == v) throw DomainError("witness search needs two distinct pages");
  PageId lu = net.require_local(u);
  PageId lv = net.require_local(v);

  GraphView view(net.graph);
  if (kind == WitnessKind::fact) view = view.reversed();
  auto from_u = bounded_bfs(view, lu, depth);
  auto from_v = bounded_bfs(view, lv, depth);

  WitnessList list;
  list.kind = kind;
  for (PageId x = 0; x < net.pages.size(); ++x) {
    if (x == lu || x == lv || from_u[x] < 0 || from_v[x] < 0) continue;
    list.entries.push_back({net.global(x), std::min(from_u[x], from_v[x]), std::max(from_u[x], from_v[x])});
  }
  std::sort(list.entries.begin(), list.entries.end(), [](const WitnessEntry& a, const WitnessEntry& b) {
    if (a.min_hop != b.min_hop) return a.min_hop < b.min_hop;
    if (a.max_hop != b.max_hop) return a.max_hop < b.max_hop;
    return a.witness < b.witness;
  });
  return list;
}

}  // namespace

WitnessList make_seek_witness_list(const Subnetwork& net, int depth, PageId u, PageId v) {
  return witness_list(net, depth, u, v, WitnessKind::seek);
}

WitnessList make_fact_witness_list(const Subnetwork& net, int depth, PageId u, PageId v) {
  return witness_list(net, depth, u, v, WitnessKind::fact);
}

std::string dump_witnesses(const WitnessList& list) {
  std::ostringstream out;
  for (const auto& e : list.entries) out << e.witness << '\t' << e.min_hop << '\t' << e.max_hop << '\n';
  return out.str();
}

}  // namespace relflow
