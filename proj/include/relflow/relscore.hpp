#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relflow/flow.hpp"
#include "relflow/subnet.hpp"
#include "relflow/webgraph.hpp"
#include "relflow/witness.hpp"

namespace relflow {

/// Flow credited to one witness: the two independent flows and their minimum.
struct WitnessFlow {
  PageId witness;
  double from_u = 0.0;  // for fact witnesses: flow from the witness to u
  double from_v = 0.0;
  double witnessed = 0.0;
};

struct WitnessFlows {
  WitnessKind kind = WitnessKind::seek;
  std::vector<WitnessFlow> entries;

  double total() const;
};

/// Knobs for the sequential witness loop. The defaults are the scoring
/// algorithm; the others exist to study redundancy.
struct WitnessProcessing {
  bool reduce_capacity = true;
  bool reverse_order = false;
  /// Called with the working capacities after each witness is processed.
  std::function<void(const CapacityMap&)> after_witness;
};

/// Walks the seek witness list in order. For each witness x: max flow u->x
/// with v removed and v->x with u removed, both on the current capacities;
/// credit the smaller; then strip the witnessed flow from x's in-edges.
WitnessFlows flow_seek(const Subnetwork& net, int depth, PageId u, PageId v, const WitnessProcessing& processing = {});

/// Mirror of flow_seek: flows run from each fact witness to u (v removed)
/// and to v (u removed) on the forward network, and the witnessed flow is
/// stripped from the witness's out-edges.
WitnessFlows flow_fact(const Subnetwork& net, int depth, PageId u, PageId v, const WitnessProcessing& processing = {});

/// Removes the flow witnessed at x from its incoming edges. The smaller of
/// the two flows is subtracted edge by edge; the larger is first scaled down
/// to the smaller's value. Nothing happens when both flows are zero.
void reduce_seek_capacity(const Subnetwork& net, PageId x, const FlowResult& flow_u, const FlowResult& flow_v,
                          CapacityMap& caps);

/// As reduce_seek_capacity, on the outgoing edges of x.
void reduce_fact_capacity(const Subnetwork& net, PageId x, const FlowResult& flow_u, const FlowResult& flow_v,
                          CapacityMap& caps);

struct RelScores {
  double seekrel = 0.0;
  double factrel = 0.0;
  double surfrel_uv = 0.0;
  double surfrel_vu = 0.0;
};

enum class Relation { seek, fact, surf_forward, surf_backward };

/// Parses "seek", "fact", "surf", "surf-forward", "surf-backward".
Relation parse_relation(std::string_view name);
std::string_view relation_name(Relation r);

struct ScoreOptions {
  int depth = 3;
  int top_k = 5;
  /// Report each keyword's flow times 1000 instead of dividing it by maxwt.
  /// With a single keyword this is the normalized score times 1000 * maxwt.
  bool paper_scale = false;
};

struct RankedPage {
  PageId page;
  double score;
};

/// Keyword networks plus the page and keyword tables needed to score pairs.
class RelationModel {
 public:
  RelationModel(std::vector<std::string> urls, KeywordIndex keywords, std::vector<Subnetwork> networks);

  /// Builds one network per keyword, fanning out over `jobs` threads.
  static RelationModel build(const WebGraph& web, const BuildOptions& options = {}, int jobs = 1);

  std::size_t page_count() const { return urls_.size(); }
  const std::string& url(PageId id) const;
  PageId page(std::string_view url) const;
  const KeywordIndex& keywords() const { return keywords_; }
  const std::vector<Subnetwork>& networks() const { return networks_; }
  const Subnetwork* network(std::string_view keyword) const;

  KeywordSet keywords_of(PageId page) const;
  /// The k keywords the pair is scored under.
  KeywordSet shared_keywords(PageId u, PageId v, int k) const;

  double seekrel(PageId u, PageId v, const ScoreOptions& options = {}) const;
  double factrel(PageId u, PageId v, const ScoreOptions& options = {}) const;
  /// (u -> v, v -> u)
  std::pair<double, double> surfrel(PageId u, PageId v, const ScoreOptions& options = {}) const;
  RelScores score(PageId u, PageId v, const ScoreOptions& options = {}) const;
  double relation_score(PageId target, PageId other, Relation relation, const ScoreOptions& options = {}) const;

  /// Scores `target` against every page sharing a keyword with it and
  /// returns the top n with positive score, descending, ties by page id.
  std::vector<RankedPage> rank_related(PageId target, Relation relation, std::size_t n,
                                       const ScoreOptions& options = {}, int jobs = 1) const;

 private:
  template <typename PerNetwork>
  double aggregate(PageId u, PageId v, const ScoreOptions& options, PerNetwork&& per_network) const;

  std::vector<std::string> urls_;
  std::unordered_map<std::string, PageId> by_url_;
  KeywordIndex keywords_;
  std::vector<std::vector<std::string>> page_keywords_;
  std::vector<Subnetwork> networks_;  // ascending by keyword
};

/// Entries of a ranked list tied (to relative 1e-9) with the best score.
std::vector<PageId> top_tied(const std::vector<RankedPage>& ranked);

/// `u_url<TAB>v_url<TAB>seekrel<TAB>factrel<TAB>surfrel_uv<TAB>surfrel_vu`, 6 significant digits.
std::string format_score_line(const std::string& u_url, const std::string& v_url, const RelScores& scores);

}  // namespace relflow
