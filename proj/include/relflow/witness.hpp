#pragma once

#include <string>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow {

struct Subnetwork;

enum class WitnessKind { seek, fact };

struct WitnessEntry {
  PageId witness;
  int min_hop;
  int max_hop;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Pages within `depth` hops of both endpoints, nearest first.
///
/// Entries never include the endpoints. Order: ascending min_hop, then
/// max_hop, then page id.
struct WitnessList {
  WitnessKind kind = WitnessKind::seek;
  std::vector<WitnessEntry> entries;
};

/// Hop counts from `start` following out-edges of `view`, up to `depth`
/// levels; -1 for nodes not reached.
std::vector<int> bounded_bfs(const GraphView& view, PageId start, int depth);

/// Common forward reach of u and v (pages both can link their way to).
/// u, v are page ids of `net`. Throws DomainError on unknown pages,
/// u == v, or depth < 1.
WitnessList make_seek_witness_list(const Subnetwork& net, int depth, PageId u, PageId v);

/// Common backward reach of u and v (pages that link their way to both),
/// found by the same search on the reversed network.
WitnessList make_fact_witness_list(const Subnetwork& net, int depth, PageId u, PageId v);

/// `witness<TAB>min_hop<TAB>max_hop` lines.
std::string dump_witnesses(const WitnessList& list);

}  // namespace relflow
