#include "relflow/webgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relflow/text_io.hpp"

namespace relflow {

WebGraph::WebGraph(std::vector<std::string> urls, Digraph links, KeywordIndex keywords)
    : urls_(std::move(urls)), links_(std::move(links)), keywords_(std::move(keywords)) {
  if (links_.node_count() != urls_.size()) {
    throw DomainError("link graph has " + std::to_string(links_.node_count()) + " nodes but the page table has " +
                      std::to_string(urls_.size()));
  }
  for (PageId id = 0; id < urls_.size(); ++id) {
    if (!by_url_.emplace(urls_[id], id).second) throw DomainError("duplicate url " + urls_[id]);
  }
  page_keywords_.resize(urls_.size());
  for (auto& [word, entry] : keywords_) {
    std::sort(entry.pages.begin(), entry.pages.end());
    entry.pages.erase(std::unique(entry.pages.begin(), entry.pages.end()), entry.pages.end());
    for (PageId p : entry.pages) {
      if (p >= urls_.size()) throw DomainError("keyword '" + word + "' names unknown page " + std::to_string(p));
      page_keywords_[p].push_back(word);
    }
  }
}

const std::string& WebGraph::url(PageId id) const {
  if (id >= urls_.size()) throw DomainError("unknown page " + std::to_string(id));
  return urls_[id];
}

std::optional<PageId> WebGraph::find_url(std::string_view url) const {
  auto it = by_url_.find(std::string(url));
  if (it == by_url_.end()) return std::nullopt;
  return it->second;
}

PageId WebGraph::page(std::string_view url) const {
  auto id = find_url(url);
  if (!id) throw DomainError("unknown url " + std::string(url));
  return *id;
}

const KeywordEntry* WebGraph::keyword(std::string_view word) const {
  auto it = keywords_.find(word);
  return it == keywords_.end() ? nullptr : &it->second;
}

std::vector<std::string> WebGraph::keywords_of(PageId id) const {
  if (id >= page_keywords_.size()) throw DomainError("unknown page " + std::to_string(id));
  return page_keywords_[id];
}

std::string_view url_host(std::string_view url) {
  std::size_t start = 0;
  if (auto scheme = url.find("://"); scheme != std::string_view::npos) start = scheme + 3;
  std::size_t end = url.find_first_of("/:?#", start);
  if (end == std::string_view::npos) end = url.size();
  return url.substr(start, end - start);
}

std::vector<std::string> load_nodes(const std::filesystem::path& node_file) {
  const std::string node_src = node_file.string();
  std::vector<std::optional<std::string>> slots;
  text::for_each_record(node_file, [&](std::size_t line, std::string_view record) {
    auto tab = record.find('\t');
    if (tab == std::string_view::npos) throw ParseError(node_src, line, "expected 'id<TAB>url'");
    std::size_t id = 0;
    try {
      id = text::parse_uint(record.substr(0, tab));
    } catch (const std::invalid_argument& e) {
      throw ParseError(node_src, line, e.what());
    }
    std::string_view url = record.substr(tab + 1);
    if (url.empty()) throw ParseError(node_src, line, "empty url");
    if (id >= slots.size()) slots.resize(id + 1);
    if (slots[id]) throw ParseError(node_src, line, "duplicate node id " + std::to_string(id));
    slots[id] = std::string(url);
  });
  std::vector<std::string> urls;
  urls.reserve(slots.size());
  for (std::size_t id = 0; id < slots.size(); ++id) {
    if (!slots[id]) throw ParseError(node_src, 0, "node ids are not dense: id " + std::to_string(id) + " is missing");
    urls.push_back(std::move(*slots[id]));
  }
  return urls;
}

KeywordIndex load_keywords(const std::filesystem::path& keyword_file, std::size_t page_count) {
  KeywordIndex keywords;
  const std::string kw_src = keyword_file.string();
  std::map<std::string, std::size_t, std::less<>> gamma_line;
  std::size_t weighted = 0, unweighted = 0;
  text::for_each_record(keyword_file, [&](std::size_t line, std::string_view record) {
    auto fields = text::split(record, '\t');
    if (fields.size() != 2 && fields.size() != 3) throw ParseError(kw_src, line, "expected 'keyword<TAB>page_id[<TAB>gamma]'");
    if (fields[0].empty()) throw ParseError(kw_src, line, "empty keyword");
    std::size_t page = 0;
    try {
      page = text::parse_uint(fields[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(kw_src, line, e.what());
    }
    if (page >= page_count) throw ParseError(kw_src, line, "keyword page " + std::to_string(page) + " is not a known node");
    KeywordEntry& entry = keywords[std::string(fields[0])];
    entry.pages.push_back(static_cast<PageId>(page));
    if (fields.size() == 3) {
      ++weighted;
      double gamma = 0;
      try {
        gamma = text::parse_double(fields[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(kw_src, line, e.what());
      }
      if (!(gamma > 0.0 && gamma <= 1.0)) throw ParseError(kw_src, line, "gamma must lie in (0, 1]");
      auto [it, fresh] = gamma_line.try_emplace(std::string(fields[0]), line);
      if (!fresh && entry.gamma != gamma) {
        throw ParseError(kw_src, line, "gamma for '" + std::string(fields[0]) + "' disagrees with line " +
                                           std::to_string(it->second));
      }
      entry.gamma = gamma;
    } else {
      ++unweighted;
    }
  });
  if (weighted > 0 && unweighted > 0) {
    throw ParseError(kw_src, 0, "either every keyword line carries a gamma or none does");
  }
  if (weighted == 0) {
    for (auto& [word, entry] : keywords) entry.gamma = 1.0 / static_cast<double>(keywords.size());
  }
  return keywords;
}

LoadResult load_edge_list(const std::filesystem::path& node_file, const std::filesystem::path& edge_file,
                          const std::optional<std::filesystem::path>& keyword_file, const LoadOptions& options) {
  std::vector<std::string> urls = load_nodes(node_file);
  LoadReport report;
  const std::string edge_src = edge_file.string();
  std::set<Edge> seen;
  text::for_each_record(edge_file, [&](std::size_t line, std::string_view record) {
    auto fields = text::split_whitespace(record);
    if (fields.size() != 2) throw ParseError(edge_src, line, "expected 'src dst'");
    Edge e{};
    try {
      auto src = text::parse_uint(fields[0]);
      auto dst = text::parse_uint(fields[1]);
      for (auto id : {src, dst}) {
        if (id >= urls.size()) throw ParseError(edge_src, line, "edge endpoint " + std::to_string(id) + " is not a known node");
      }
      e = Edge{static_cast<PageId>(src), static_cast<PageId>(dst)};
    } catch (const std::invalid_argument& ex) {
      throw ParseError(edge_src, line, ex.what());
    }
    if (e.src == e.dst) {
      ++report.self_loops;
      return;
    }
    if (options.drop_intra_host && url_host(urls[e.src]) == url_host(urls[e.dst])) {
      ++report.intra_host;
      return;
    }
    if (!seen.insert(e).second) ++report.duplicates;
  });

  KeywordIndex keywords;
  if (keyword_file) keywords = load_keywords(*keyword_file, urls.size());

  Digraph links(urls.size(), std::vector<Edge>(seen.begin(), seen.end()));
  return LoadResult{WebGraph(std::move(urls), std::move(links), std::move(keywords)), report};
}

std::string serialize_nodes(const WebGraph& web) {
  std::ostringstream out;
  for (PageId id = 0; id < web.page_count(); ++id) out << id << '\t' << web.url(id) << '\n';
  return out.str();
}

std::string serialize_edges(const WebGraph& web) {
  std::ostringstream out;
  for (const Edge& e : web.links().edges()) out << e.src << ' ' << e.dst << '\n';
  return out.str();
}

std::string serialize_keywords(const WebGraph& web) {
  std::ostringstream out;
  for (const auto& [word, entry] : web.keywords()) {
    for (PageId p : entry.pages) out << word << '\t' << p << '\t' << text::format_sig(entry.gamma, 17) << '\n';
  }
  return out.str();
}

std::vector<PageId> limit_outlinks_near(PageId anchor_page, PageId core_page, const std::vector<PageId>& ordered_outlinks,
                                        int window) {
  if (window < 0) throw std::invalid_argument("outlink window must be non-negative");
  auto it = std::find(ordered_outlinks.begin(), ordered_outlinks.end(), core_page);
  if (it == ordered_outlinks.end()) {
    throw std::invalid_argument("page " + std::to_string(anchor_page) + " has no link to core page " +
                                std::to_string(core_page));
  }
  auto pos = static_cast<std::ptrdiff_t>(it - ordered_outlinks.begin());
  auto size = static_cast<std::ptrdiff_t>(ordered_outlinks.size());
  auto first = std::max<std::ptrdiff_t>(0, pos - window);
  auto last = std::min<std::ptrdiff_t>(size, pos + window + 1);
  return {ordered_outlinks.begin() + first, ordered_outlinks.begin() + last};
}

}  // namespace relflow
