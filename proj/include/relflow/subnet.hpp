#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relflow/graph.hpp"
#include "relflow/hits.hpp"
#include "relflow/webgraph.hpp"

namespace relflow {

struct WeightedKeyword {
  std::string keyword;
  double gamma = 0.0;

  friend bool operator==(const WeightedKeyword&, const WeightedKeyword&) = default;
};

/// Keywords in descending significance; names distinct, gamma in (0, 1].
using KeywordSet = std::vector<WeightedKeyword>;

/// The significant keywords of one page: every keyword whose page set holds
/// it, descending by gamma, ties by name.
KeywordSet page_keywords(const WebGraph& web, PageId page);

/// Keywords common to both sets, ranked by gamma_u + gamma_v (ties by name),
/// truncated to k. Each output gamma is the mean of its two inputs.
/// Throws std::invalid_argument if k < 1.
KeywordSet select_keywords(const KeywordSet& ku, const KeywordSet& kv, int k);

struct BuildOptions {
  /// Most in-linkers taken per page when expanding; 0 means unlimited.
  std::size_t inlink_cap = 1000;
  /// Links kept on each side of the core link when adding an in-linker's siblings.
  int sibling_window = 5;
  /// Co-outlink expansion (pages sharing an outlink with the core set).
  bool co_outlinks = true;
  /// Sibling expansion (other pages linked from in-linkers of the core set).
  bool siblings = true;
  HitsOptions hits;
};

/// A keyword-scoped capacitated network.
///
/// Nodes are renumbered densely: local id i stands for page `pages[i]`, and
/// `pages` is ascending, so local order agrees with PageId order. Edge ids
/// index `capacity`; every edge (x, y) carries capacity hub[x].
struct Subnetwork {
  std::string keyword;
  std::vector<PageId> pages;
  Digraph graph;
  std::vector<double> capacity;
  std::vector<double> hub;
  std::vector<double> auth;
  double maxwt = 0.0;

  /// No edges: every score on this network is 0.
  bool degenerate() const { return graph.edge_count() == 0; }

  std::optional<PageId> local(PageId page) const;
  /// Throws DomainError if `page` is not part of this network.
  PageId require_local(PageId page) const;
  PageId global(PageId local_id) const { return pages[local_id]; }
};

/// Node set of a keyword network before it is capacitated: the core pages,
/// their in-linkers and out-links, then (optionally) co-outlink pages and
/// in-linker siblings. One expansion pass; ascending.
std::vector<PageId> grow_page_set(const WebGraph& web, const std::vector<PageId>& core, const BuildOptions& options);

/// Grows the keyword's core set, induces the edges, runs HITS and assigns
/// each edge its source's hub value. Throws DomainError for an unknown
/// keyword or an empty core set.
Subnetwork build_subnetwork(const WebGraph& web, std::string_view keyword, const BuildOptions& options = {});

/// Capacitates an already chosen node set (the pages must exist in `web`).
Subnetwork capacitate(const WebGraph& web, std::string keyword, std::vector<PageId> pages, const HitsOptions& hits = {});

/// Cache file:
///   keyword<TAB>maxwt<TAB>node_count<TAB>edge_count
///   node_count lines  page_id<TAB>hub<TAB>auth
///   edge_count lines  src_page<TAB>dst_page<TAB>capacity
/// Reals are written with 17 significant digits so a reload is bit-exact.
std::string serialize_subnetwork(const Subnetwork& net);
Subnetwork parse_subnetwork(std::string_view content, const std::string& source = "<subnetwork>");
void save_subnetwork(const Subnetwork& net, const std::filesystem::path& path);
Subnetwork load_subnetwork(const std::filesystem::path& path);

}  // namespace relflow
