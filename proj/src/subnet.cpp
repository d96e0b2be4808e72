#include "relflow/subnet.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "relflow/text_io.hpp"

namespace relflow {
namespace {

bool by_significance(const WeightedKeyword& a, const WeightedKeyword& b) {
  if (a.gamma != b.gamma) return a.gamma > b.gamma;
  return a.keyword < b.keyword;
}

std::vector<PageId> sources_of(const Digraph& g, PageId x) {
  std::vector<PageId> out;
  for (EdgeId e : g.in_edges(x)) out.push_back(g.edge(e).src);
  return out;
}

std::vector<PageId> targets_of(const Digraph& g, PageId x) {
  std::vector<PageId> out;
  for (EdgeId e : g.out_edges(x)) out.push_back(g.edge(e).dst);
  return out;
}

std::vector<PageId> capped(std::vector<PageId> pages, std::size_t cap) {
  if (cap > 0 && pages.size() > cap) pages.resize(cap);
  return pages;
}

}  // namespace

KeywordSet page_keywords(const WebGraph& web, PageId page) {
  KeywordSet out;
  for (const std::string& word : web.keywords_of(page)) out.push_back({word, web.keyword(word)->gamma});
  std::sort(out.begin(), out.end(), by_significance);
  return out;
}

KeywordSet select_keywords(const KeywordSet& ku, const KeywordSet& kv, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::map<std::string_view, double> gamma_v;
  for (const auto& w : kv) gamma_v.emplace(w.keyword, w.gamma);

  std::vector<std::pair<double, WeightedKeyword>> common;
  for (const auto& w : ku) {
    auto it = gamma_v.find(w.keyword);
    if (it == gamma_v.end()) continue;
    common.push_back({w.gamma + it->second, {w.keyword, (w.gamma + it->second) / 2.0}});
  }
  std::sort(common.begin(), common.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.keyword < b.second.keyword;
  });
  KeywordSet out;
  for (const auto& [combined, w] : common) {
    if (out.size() == static_cast<std::size_t>(k)) break;
    out.push_back(w);
  }
  return out;
}

std::optional<PageId> Subnetwork::local(PageId page) const {
  auto it = std::lower_bound(pages.begin(), pages.end(), page);
  if (it == pages.end() || *it != page) return std::nullopt;
  return static_cast<PageId>(it - pages.begin());
}

PageId Subnetwork::require_local(PageId page) const {
  auto id = local(page);
  if (!id) throw DomainError("page " + std::to_string(page) + " is not in the '" + keyword + "' subnetwork");
  return *id;
}

std::vector<PageId> grow_page_set(const WebGraph& web, const std::vector<PageId>& core, const BuildOptions& options) {
  const Digraph& g = web.links();
  std::set<PageId> grown(core.begin(), core.end());
  for (PageId p : core) {
    if (!g.contains(p)) throw DomainError("unknown page " + std::to_string(p));
    for (PageId y : capped(sources_of(g, p), options.inlink_cap)) grown.insert(y);
    for (PageId z : targets_of(g, p)) grown.insert(z);
  }
  // Co-outlink pages: other in-linkers of whatever the core links to.
  if (options.co_outlinks) {
    for (PageId p : core) {
      for (PageId z : targets_of(g, p)) {
        for (PageId y : capped(sources_of(g, z), options.inlink_cap)) grown.insert(y);
      }
    }
  }
  // Siblings: links near the core link on each in-linker.
  if (options.siblings) {
    for (PageId p : core) {
      for (PageId y : capped(sources_of(g, p), options.inlink_cap)) {
        for (PageId s : limit_outlinks_near(y, p, targets_of(g, y), options.sibling_window)) grown.insert(s);
      }
    }
  }
  return {grown.begin(), grown.end()};
}

Subnetwork capacitate(const WebGraph& web, std::string keyword, std::vector<PageId> pages, const HitsOptions& hits) {
  std::sort(pages.begin(), pages.end());
  pages.erase(std::unique(pages.begin(), pages.end()), pages.end());
  if (pages.empty()) throw DomainError("subnetwork '" + keyword + "' has no pages");

  Subnetwork net;
  net.keyword = std::move(keyword);
  net.pages = std::move(pages);

  const Digraph& g = web.links();
  std::vector<Edge> edges;
  for (PageId local_src = 0; local_src < net.pages.size(); ++local_src) {
    for (EdgeId e : g.out_edges(net.pages[local_src])) {
      if (auto local_dst = net.local(g.edge(e).dst)) edges.push_back({local_src, *local_dst});
    }
  }
  net.graph = Digraph(net.pages.size(), std::move(edges));

  HitsScores scores = compute_hits(GraphView(net.graph), hits);
  net.hub = std::move(scores.hub);
  net.auth = std::move(scores.auth);

  net.capacity.reserve(net.graph.edge_count());
  for (const Edge& e : net.graph.edges()) {
    net.capacity.push_back(net.hub[e.src]);
    net.maxwt = std::max(net.maxwt, net.hub[e.src]);
  }
  return net;
}

Subnetwork build_subnetwork(const WebGraph& web, std::string_view keyword, const BuildOptions& options) {
  const KeywordEntry* entry = web.keyword(keyword);
  if (entry == nullptr) throw DomainError("unknown keyword '" + std::string(keyword) + "'");
  if (entry->pages.empty()) throw DomainError("keyword '" + std::string(keyword) + "' has no pages");
  return capacitate(web, std::string(keyword), grow_page_set(web, entry->pages, options), options.hits);
}

std::string serialize_subnetwork(const Subnetwork& net) {
  std::ostringstream out;
  out << net.keyword << '\t' << text::format_sig(net.maxwt, 17) << '\t' << net.pages.size() << '\t'
      << net.graph.edge_count() << '\n';
  for (PageId x = 0; x < net.pages.size(); ++x) {
    out << net.pages[x] << '\t' << text::format_sig(net.hub[x], 17) << '\t' << text::format_sig(net.auth[x], 17) << '\n';
  }
  for (EdgeId e = 0; e < net.graph.edge_count(); ++e) {
    const Edge& edge = net.graph.edge(e);
    out << net.pages[edge.src] << '\t' << net.pages[edge.dst] << '\t' << text::format_sig(net.capacity[e], 17) << '\n';
  }
  return out.str();
}

Subnetwork parse_subnetwork(std::string_view content, const std::string& source) {
  std::istringstream in{std::string(content)};
  Subnetwork net;
  std::size_t node_count = 0, edge_count = 0, seen = 0;
  bool header = false;
  std::vector<std::pair<Edge, double>> edges;
  text::for_each_record(in, [&](std::size_t line, std::string_view record) {
    auto fields = text::split(record, '\t');
    try {
      if (!header) {
        if (fields.size() != 4) throw ParseError(source, line, "expected 'keyword<TAB>maxwt<TAB>nodes<TAB>edges'");
        net.keyword = std::string(fields[0]);
        net.maxwt = text::parse_double(fields[1]);
        node_count = text::parse_uint(fields[2]);
        edge_count = text::parse_uint(fields[3]);
        header = true;
        return;
      }
      if (fields.size() != 3) throw ParseError(source, line, "expected three tab-separated fields");
      if (seen < node_count) {
        auto page = static_cast<PageId>(text::parse_uint(fields[0]));
        if (!net.pages.empty() && page <= net.pages.back()) throw ParseError(source, line, "node ids must ascend");
        net.pages.push_back(page);
        net.hub.push_back(text::parse_double(fields[1]));
        net.auth.push_back(text::parse_double(fields[2]));
      } else if (seen < node_count + edge_count) {
        auto src = static_cast<PageId>(text::parse_uint(fields[0]));
        auto dst = static_cast<PageId>(text::parse_uint(fields[1]));
        auto ls = net.local(src), ld = net.local(dst);
        if (!ls || !ld) throw ParseError(source, line, "edge endpoint is not a listed node");
        edges.push_back({{*ls, *ld}, text::parse_double(fields[2])});
      } else {
        throw ParseError(source, line, "more records than the header declares");
      }
      ++seen;
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line, e.what());
    }
  });
  if (!header) throw ParseError(source, 0, "missing header");
  if (seen != node_count + edge_count) throw ParseError(source, 0, "fewer records than the header declares");

  std::vector<Edge> plain;
  for (const auto& [e, c] : edges) plain.push_back(e);
  net.graph = Digraph(net.pages.size(), plain);
  if (net.graph.edge_count() != edges.size()) throw ParseError(source, 0, "duplicate edges");
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [e, c] : edges) net.capacity.push_back(c);
  return net;
}

void save_subnetwork(const Subnetwork& net, const std::filesystem::path& path) {
  text::write_atomic(path, serialize_subnetwork(net));
}

Subnetwork load_subnetwork(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_subnetwork(buf.str(), path.string());
}

}  // namespace relflow
