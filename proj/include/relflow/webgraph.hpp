#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relflow/graph.hpp"

namespace relflow {

/// Pages containing one keyword (the keyword's core set), plus its weight.
struct KeywordEntry {
  std::vector<PageId> pages;  // sorted, unique
  double gamma = 0.0;
};

using KeywordIndex = std::map<std::string, KeywordEntry, std::less<>>;

/// A Web snapshot: page table, hyperlink graph, and keyword index.
class WebGraph {
 public:
  WebGraph() = default;
  WebGraph(std::vector<std::string> urls, Digraph links, KeywordIndex keywords = {});

  std::size_t page_count() const { return urls_.size(); }
  const Digraph& links() const { return links_; }
  GraphView view() const { return GraphView(links_); }

  const std::string& url(PageId id) const;
  std::optional<PageId> find_url(std::string_view url) const;
  /// Throws DomainError for an unknown url.
  PageId page(std::string_view url) const;
  const std::vector<std::string>& urls() const { return urls_; }

  const KeywordIndex& keywords() const { return keywords_; }
  const KeywordEntry* keyword(std::string_view word) const;
  /// Keywords whose page set contains `id`, ascending by name.
  std::vector<std::string> keywords_of(PageId id) const;

 private:
  std::vector<std::string> urls_;
  std::unordered_map<std::string, PageId> by_url_;
  Digraph links_;
  KeywordIndex keywords_;
  std::vector<std::vector<std::string>> page_keywords_;
};

struct LoadOptions {
  /// Drop links whose two endpoints share a URL host.
  bool drop_intra_host = false;
};

struct LoadReport {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  std::size_t intra_host = 0;

  std::size_t warning_count() const { return self_loops + duplicates + intra_host; }
};

struct LoadResult {
  WebGraph graph;
  LoadReport report;
};

/// Reads the line-oriented node, edge, and (optional) keyword files.
///
///   nodes:    id<TAB>url            ids dense from 0, any order
///   edges:    src<SPACE>dst
///   keywords: keyword<TAB>page_id[<TAB>gamma]
///
/// Lines starting with '#' are comments. Self-loops and repeated edges are
/// dropped and counted. When no keyword line carries a gamma, every keyword
/// gets 1/|K|.
LoadResult load_edge_list(const std::filesystem::path& node_file, const std::filesystem::path& edge_file,
                          const std::optional<std::filesystem::path>& keyword_file, const LoadOptions& options = {});

/// The node file alone: urls indexed by page id.
std::vector<std::string> load_nodes(const std::filesystem::path& node_file);
/// The keyword file alone, checked against `page_count` pages.
KeywordIndex load_keywords(const std::filesystem::path& keyword_file, std::size_t page_count);

std::string serialize_nodes(const WebGraph& web);
std::string serialize_edges(const WebGraph& web);
std::string serialize_keywords(const WebGraph& web);

/// The host part of a URL: text after "scheme://" up to the first of "/:?#".
std::string_view url_host(std::string_view url);

/// Keeps the `window` links on each side of the link to `core_page` in a
/// page's ordered outlink list. Throws std::invalid_argument if the core link
/// is absent or window < 0.
std::vector<PageId> limit_outlinks_near(PageId anchor_page, PageId core_page, const std::vector<PageId>& ordered_outlinks,
                                        int window);

}  // namespace relflow
