#include "relflow/graph.hpp"

#include <algorithm>
#include <numeric>

namespace relflow {

Digraph::Digraph(std::size_t node_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.src >= node_count || e.dst >= node_count) {
      throw DomainError("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                        " references a node outside [0, " + std::to_string(node_count) + ")");
    }
    if (e.src == e.dst) {
      throw DomainError("self-loop on node " + std::to_string(e.src));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_offset_.assign(node_count + 1, 0);
  in_offset_.assign(node_count + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offset_[e.src + 1];
    ++in_offset_[e.dst + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());

  out_ids_.resize(edges_.size());
  std::iota(out_ids_.begin(), out_ids_.end(), EdgeId{0});

  in_ids_ = out_ids_;
  std::stable_sort(in_ids_.begin(), in_ids_.end(), [this](EdgeId a, EdgeId b) {
    return edges_[a].dst < edges_[b].dst;
  });
}

std::span<const EdgeId> Digraph::out_edges(PageId x) const {
  if (!contains(x)) throw DomainError("unknown node " + std::to_string(x));
  return std::span<const EdgeId>(out_ids_).subspan(out_offset_[x], out_offset_[x + 1] - out_offset_[x]);
}

std::span<const EdgeId> Digraph::in_edges(PageId x) const {
  if (!contains(x)) throw DomainError("unknown node " + std::to_string(x));
  return std::span<const EdgeId>(in_ids_).subspan(in_offset_[x], in_offset_[x + 1] - in_offset_[x]);
}

bool Digraph::has_edge(PageId src, PageId dst) const {
  if (!contains(src) || !contains(dst)) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst});
}

GraphView GraphView::reversed() const {
  GraphView v = *this;
  v.reversed_ = !reversed_;
  return v;
}

GraphView GraphView::without(PageId x) const {
  return without(std::span<const PageId>(&x, 1));
}

GraphView GraphView::without(std::span<const PageId> xs) const {
  GraphView v = *this;
  v.excluded_.insert(v.excluded_.end(), xs.begin(), xs.end());
  std::sort(v.excluded_.begin(), v.excluded_.end());
  v.excluded_.erase(std::unique(v.excluded_.begin(), v.excluded_.end()), v.excluded_.end());
  return v;
}

bool GraphView::is_excluded(PageId x) const {
  return std::binary_search(excluded_.begin(), excluded_.end(), x);
}

std::vector<PageId> GraphView::out_neighbors(PageId x) const { return neighbors(x, !reversed_); }

std::vector<PageId> GraphView::in_neighbors(PageId x) const { return neighbors(x, reversed_); }

std::vector<PageId> GraphView::neighbors(PageId x, bool forward) const {
  if (!base_->contains(x)) throw DomainError("unknown node " + std::to_string(x));
  if (is_excluded(x)) throw DomainError("node " + std::to_string(x) + " is excluded from this view");
  std::vector<PageId> out;
  if (forward) {
    for (EdgeId e : base_->out_edges(x)) {
      PageId y = base_->edge(e).dst;
      if (!is_excluded(y)) out.push_back(y);
    }
  } else {
    for (EdgeId e : base_->in_edges(x)) {
      PageId y = base_->edge(e).src;
      if (!is_excluded(y)) out.push_back(y);
    }
  }
  return out;
}

}  // namespace relflow
