#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "halin/graph_core.hpp"

namespace halin {

/// Bijection vertices -> positions 1..n, stored with its inverse.
class Layout {
 public:
  Layout() = default;
  /// `vertex_at[i]` is the vertex at position i+1. Throws InvalidLayout
  /// unless the sequence is a permutation of 0..n-1.
  explicit Layout(std::vector<VertexId> vertex_at);

  static Layout identity(int n);

  int size() const noexcept { return static_cast<int>(vertex_at_.size()); }
  /// 1-based position of v.
  int position(VertexId v) const { return position_[v]; }
  /// Vertex at 1-based position p.
  VertexId at(int p) const { return vertex_at_[p - 1]; }
  const std::vector<VertexId>& order() const noexcept { return vertex_at_; }

  Layout reversed() const;

  friend bool operator==(const Layout& a, const Layout& b) { return a.vertex_at_ == b.vertex_at_; }

 private:
  std::vector<VertexId> vertex_at_;
  std::vector<int> position_;
};

inline std::int64_t expand(const Edge& e, const Layout& layout) {
  const int d = layout.position(e.u) - layout.position(e.v);
  return d < 0 ? -d : d;
}

struct ArrangementReport {
  std::int64_t total_cost = 0;
  std::int64_t tree_cost = 0;
  std::int64_t cycle_cost = 0;
  /// Parallel to the graph's edge list.
  std::vector<std::int64_t> per_edge_expand;
};

/// Linear arrangement cost, split by edge kind.
ArrangementReport la_cost(const Graph& g, const Layout& layout);
ArrangementReport la_cost(const HalinGraph& h, const Layout& layout);
std::int64_t la_cost(std::span<const Edge> edges, const Layout& layout);

/// Ordered sequence of disjoint vertex sets.
using BlockPartition = std::vector<std::vector<VertexId>>;

/// True iff every vertex of block i precedes every vertex of block j for i < j.
bool is_of_type(const Layout& layout, const BlockPartition& blocks);

/// Exchanges two contiguous position ranges, keeping the internal order of
/// each block and of the vertices between them. Blocks may be passed in
/// either order. Throws NotContiguous or Overlapping.
Layout sigma_swap(const Layout& layout, std::span<const VertexId> a, std::span<const VertexId> b);

/// Reverses the order of a contiguous block in place.
Layout reverse_block(const Layout& layout, std::span<const VertexId> block);

/// Same operations on raw half-open position ranges [first, last) with
/// 0-based indices; the building blocks for the rearrangement routines.
void swap_ranges_in_place(std::vector<VertexId>& order, int a_first, int a_last, int b_first, int b_last);
void reverse_range_in_place(std::vector<VertexId>& order, int first, int last);

/// Tree path from the vertex at position 1 to the vertex at position n.
std::vector<VertexId> spinal_path(const EmbeddedTree& tree, const Layout& layout);
inline std::vector<VertexId> spinal_path(const HalinGraph& h, const Layout& layout) {
  return spinal_path(h.tree(), layout);
}

/// Number of vertices of `set` strictly between lo and hi; an absent bound
/// is open-ended.
int delta_count(const Layout& layout, std::optional<VertexId> lo, std::optional<VertexId> hi,
                std::span<const VertexId> set);

struct Branch {
  VertexId anchor = 0;
  std::vector<VertexId> vertices;
};

struct SpinalSubtree {
  VertexId spine_vertex = 0;
  std::vector<VertexId> vertices;  // includes spine_vertex
  std::vector<Branch> branches;
};

struct SpinalDecomposition {
  std::vector<VertexId> path;
  std::vector<SpinalSubtree> subtrees;  // parallel to path
};

/// Removes spinal and cycle edges; reports the subtree hanging from every
/// spine vertex and the branches of that subtree.
SpinalDecomposition spinal_decomposition(const EmbeddedTree& tree, const Layout& layout);
inline SpinalDecomposition spinal_decomposition(const HalinGraph& h, const Layout& layout) {
  return spinal_decomposition(h.tree(), layout);
}

}  // namespace halin
