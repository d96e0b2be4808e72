#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relflow {

using PageId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when a query names a node that does not exist or is hidden by a view.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  PageId src;
  PageId dst;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed simple graph over dense ids [0, n).
///
/// Edges are stored sorted by (src, dst) and an EdgeId is the position in
/// that order, so every traversal below visits neighbors in ascending id
/// order. In-edges are indexed separately, sorted by (dst, src).
class Digraph {
 public:
  Digraph() = default;

  /// Sorts and deduplicates `edges`. Throws DomainError on a self-loop or an
  /// endpoint outside [0, node_count).
  Digraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return out_offset_.empty() ? 0 : out_offset_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Ids of edges leaving x, ascending by destination.
  std::span<const EdgeId> out_edges(PageId x) const;
  /// Ids of edges entering x, ascending by source.
  std::span<const EdgeId> in_edges(PageId x) const;

  std::size_t out_degree(PageId x) const { return out_edges(x).size(); }
  std::size_t in_degree(PageId x) const { return in_edges(x).size(); }

  bool contains(PageId x) const { return x < node_count(); }
  bool has_edge(PageId src, PageId dst) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offset_;
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offset_;
  std::vector<EdgeId> in_ids_;
};

/// A read-only window on a Digraph: optionally reversed, optionally hiding a
/// set of nodes together with every edge touching them.
class GraphView {
 public:
  explicit GraphView(const Digraph& base) : base_(&base) {}

  const Digraph& base() const { return *base_; }
  bool is_reversed() const { return reversed_; }
  std::span<const PageId> excluded() const { return excluded_; }

  GraphView reversed() const;
  GraphView without(PageId x) const;
  GraphView without(std::span<const PageId> xs) const;

  bool is_excluded(PageId x) const;
  bool contains(PageId x) const { return base_->contains(x) && !is_excluded(x); }

  /// Successors of x under this view's direction, ascending.
  /// Throws DomainError if x is unknown or excluded.
  std::vector<PageId> out_neighbors(PageId x) const;
  std::vector<PageId> in_neighbors(PageId x) const;

 private:
  std::vector<PageId> neighbors(PageId x, bool forward) const;

  const Digraph* base_;
  bool reversed_ = false;
  std::vector<PageId> excluded_;  // sorted, unique
};

}  // namespace relflow
