#include "relflow/relscore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "relflow/text_io.hpp"

namespace relflow {

double WitnessFlows::total() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.witnessed;
  return sum;
}

namespace {

// Strips the witnessed amount from `edges` (a witness's in- or out-edges).
void reduce_capacity(std::span<const EdgeId> edges, const FlowResult& flow_u, const FlowResult& flow_v,
                     CapacityMap& caps) {
  const bool u_smaller = flow_u.value <= flow_v.value;
  const FlowResult& smaller = u_smaller ? flow_u : flow_v;
  const FlowResult& larger = u_smaller ? flow_v : flow_u;
  if (larger.value <= 0.0) return;
  const double ratio = smaller.value / larger.value;
  for (EdgeId e : edges) caps.subtract(e, smaller.edge_flows[e]);
  for (EdgeId e : edges) caps.subtract(e, larger.edge_flows[e] * ratio);
}

WitnessFlows witness_flows(const Subnetwork& net, int depth, PageId u, PageId v, WitnessKind kind,
                           const WitnessProcessing& processing) {
  WitnessList list = kind == WitnessKind::seek ? make_seek_witness_list(net, depth, u, v)
                                               : make_fact_witness_list(net, depth, u, v);
  if (processing.reverse_order) std::reverse(list.entries.begin(), list.entries.end());

  const PageId lu = net.require_local(u);
  const PageId lv = net.require_local(v);
  CapacityMap caps(net.capacity);
  WitnessFlows out;
  out.kind = kind;
  for (const WitnessEntry& entry : list.entries) {
    const PageId x = net.require_local(entry.witness);
    FlowResult to_u, to_v;
    if (kind == WitnessKind::seek) {
      to_u = max_flow(net.graph, caps.values(), lu, x, std::span<const PageId>(&lv, 1));
      to_v = max_flow(net.graph, caps.values(), lv, x, std::span<const PageId>(&lu, 1));
    } else {
      to_u = max_flow(net.graph, caps.values(), x, lu, std::span<const PageId>(&lv, 1));
      to_v = max_flow(net.graph, caps.values(), x, lv, std::span<const PageId>(&lu, 1));
    }
    out.entries.push_back({entry.witness, to_u.value, to_v.value, std::min(to_u.value, to_v.value)});
    if (processing.reduce_capacity) {
      auto edges = kind == WitnessKind::seek ? net.graph.in_edges(x) : net.graph.out_edges(x);
      reduce_capacity(edges, to_u, to_v, caps);
    }
    if (processing.after_witness) processing.after_witness(caps);
  }
  return out;
}

}  // namespace

WitnessFlows flow_seek(const Subnetwork& net, int depth, PageId u, PageId v, const WitnessProcessing& processing) {
  return witness_flows(net, depth, u, v, WitnessKind::seek, processing);
}

WitnessFlows flow_fact(const Subnetwork& net, int depth, PageId u, PageId v, const WitnessProcessing& processing) {
  return witness_flows(net, depth, u, v, WitnessKind::fact, processing);
}

void reduce_seek_capacity(const Subnetwork& net, PageId x, const FlowResult& flow_u, const FlowResult& flow_v,
                          CapacityMap& caps) {
  reduce_capacity(net.graph.in_edges(net.require_local(x)), flow_u, flow_v, caps);
}

void reduce_fact_capacity(const Subnetwork& net, PageId x, const FlowResult& flow_u, const FlowResult& flow_v,
                          CapacityMap& caps) {
  reduce_capacity(net.graph.out_edges(net.require_local(x)), flow_u, flow_v, caps);
}

Relation parse_relation(std::string_view name) {
  if (name == "seek") return Relation::seek;
  if (name == "fact") return Relation::fact;
  if (name == "surf" || name == "surf-forward") return Relation::surf_forward;
  if (name == "surf-backward") return Relation::surf_backward;
  throw std::invalid_argument("unknown relation '" + std::string(name) +
                              "' (expected seek, fact, surf-forward or surf-backward)");
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::seek: return "seek";
    case Relation::fact: return "fact";
    case Relation::surf_forward: return "surf-forward";
    case Relation::surf_backward: return "surf-backward";
  }
  return "?";
}

RelationModel::RelationModel(std::vector<std::string> urls, KeywordIndex keywords, std::vector<Subnetwork> networks)
    : urls_(std::move(urls)), keywords_(std::move(keywords)), networks_(std::move(networks)) {
  for (PageId id = 0; id < urls_.size(); ++id) {
    if (!by_url_.emplace(urls_[id], id).second) throw DomainError("duplicate url " + urls_[id]);
  }
  page_keywords_.resize(urls_.size());
  for (const auto& [word, entry] : keywords_) {
    for (PageId p : entry.pages) {
      if (p >= urls_.size()) throw DomainError("keyword '" + word + "' names unknown page " + std::to_string(p));
      page_keywords_[p].push_back(word);
    }
  }
  std::sort(networks_.begin(), networks_.end(),
            [](const Subnetwork& a, const Subnetwork& b) { return a.keyword < b.keyword; });
}

RelationModel RelationModel::build(const WebGraph& web, const BuildOptions& options, int jobs) {
  std::vector<std::string> words;
  for (const auto& [word, entry] : web.keywords()) {
    if (!entry.pages.empty()) words.push_back(word);
  }
  std::vector<Subnetwork> networks(words.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(words.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < words.size(); i = next++) {
      try {
        networks[i] = build_subnetwork(web, words[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return RelationModel(web.urls(), web.keywords(), std::move(networks));
}

const std::string& RelationModel::url(PageId id) const {
  if (id >= urls_.size()) throw DomainError("unknown page " + std::to_string(id));
  return urls_[id];
}

PageId RelationModel::page(std::string_view url) const {
  auto it = by_url_.find(std::string(url));
  if (it == by_url_.end()) throw DomainError("unknown url " + std::string(url));
  return it->second;
}

const Subnetwork* RelationModel::network(std::string_view keyword) const {
  auto it = std::lower_bound(networks_.begin(), networks_.end(), keyword,
                             [](const Subnetwork& n, std::string_view k) { return n.keyword < k; });
  if (it == networks_.end() || it->keyword != keyword) return nullptr;
  return &*it;
}

KeywordSet RelationModel::keywords_of(PageId page) const {
  if (page >= page_keywords_.size()) throw DomainError("unknown page " + std::to_string(page));
  KeywordSet out;
  for (const std::string& word : page_keywords_[page]) out.push_back({word, keywords_.find(word)->second.gamma});
  std::sort(out.begin(), out.end(), [](const WeightedKeyword& a, const WeightedKeyword& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    return a.keyword < b.keyword;
  });
  return out;
}

KeywordSet RelationModel::shared_keywords(PageId u, PageId v, int k) const {
  return select_keywords(keywords_of(u), keywords_of(v), k);
}

template <typename PerNetwork>
double RelationModel::aggregate(PageId u, PageId v, const ScoreOptions& options, PerNetwork&& per_network) const {
  if (u == v) throw DomainError("scores are defined for two distinct pages");
  double score = 0.0;
  for (const WeightedKeyword& w : shared_keywords(u, v, options.top_k)) {
    const Subnetwork* net = network(w.keyword);
    if (net == nullptr || net->degenerate() || net->maxwt <= 0.0) continue;
    if (!net->local(u) || !net->local(v)) continue;
    double flow = per_network(*net);
    score += options.paper_scale ? w.gamma * flow * 1000.0 : w.gamma / net->maxwt * flow;
  }
  return score;
}

double RelationModel::seekrel(PageId u, PageId v, const ScoreOptions& options) const {
  return aggregate(u, v, options, [&](const Subnetwork& net) { return flow_seek(net, options.depth, u, v).total(); });
}

double RelationModel::factrel(PageId u, PageId v, const ScoreOptions& options) const {
  return aggregate(u, v, options, [&](const Subnetwork& net) { return flow_fact(net, options.depth, u, v).total(); });
}

std::pair<double, double> RelationModel::surfrel(PageId u, PageId v, const ScoreOptions& options) const {
  auto directed = [&](PageId from, PageId to) {
    return aggregate(from, to, options, [&](const Subnetwork& net) {
      return max_flow(net, CapacityMap(net.capacity), from, to).value;
    });
  };
  return {directed(u, v), directed(v, u)};
}

RelScores RelationModel::score(PageId u, PageId v, const ScoreOptions& options) const {
  auto [uv, vu] = surfrel(u, v, options);
  return RelScores{seekrel(u, v, options), factrel(u, v, options), uv, vu};
}

double RelationModel::relation_score(PageId target, PageId other, Relation relation,
                                     const ScoreOptions& options) const {
  switch (relation) {
    case Relation::seek: return seekrel(target, other, options);
    case Relation::fact: return factrel(target, other, options);
    case Relation::surf_forward: return surfrel(target, other, options).first;
    case Relation::surf_backward: return surfrel(other, target, options).first;
  }
  return 0.0;
}

std::vector<RankedPage> RelationModel::rank_related(PageId target, Relation relation, std::size_t n,
                                                    const ScoreOptions& options, int jobs) const {
  if (target >= urls_.size()) throw DomainError("unknown page " + std::to_string(target));
  std::vector<PageId> candidates;
  for (const std::string& word : page_keywords_[target]) {
    const auto& pages = keywords_.find(word)->second.pages;
    candidates.insert(candidates.end(), pages.begin(), pages.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::erase(candidates, target);

  std::vector<double> scores(candidates.size(), 0.0);
  std::vector<std::exception_ptr> errors(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        scores[i] = relation_score(target, candidates[i], relation, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<RankedPage> ranked;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (scores[i] > kFlowEpsilon) ranked.push_back({candidates[i], scores[i]});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedPage& a, const RankedPage& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.page < b.page;
  });
  if (ranked.size() > n) ranked.resize(n);
  return ranked;
}

std::vector<PageId> top_tied(const std::vector<RankedPage>& ranked) {
  std::vector<PageId> out;
  if (ranked.empty()) return out;
  const double best = ranked.front().score;
  for (const auto& r : ranked) {
    if (std::abs(r.score - best) <= 1e-9 * std::abs(best)) out.push_back(r.page);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_score_line(const std::string& u_url, const std::string& v_url, const RelScores& s) {
  std::ostringstream out;
  out << u_url << '\t' << v_url << '\t' << text::format_sig(s.seekrel, 6) << '\t' << text::format_sig(s.factrel, 6)
      << '\t' << text::format_sig(s.surfrel_uv, 6) << '\t' << text::format_sig(s.surfrel_vu, 6);
  return out.str();
}

}  // namespace relflow
