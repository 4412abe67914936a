#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "halin/error.hpp"

namespace halin {

/// Dense vertex index; a graph on n vertices uses ids 0..n-1.
using VertexId = int;

enum class EdgeKind : std::uint8_t { Tree, Cycle };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Tree;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Plain undirected graph: vertex count plus edge list.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// Rooted tree whose children order is its planar embedding.
class EmbeddedTree {
 public:
  EmbeddedTree() = default;

  int size() const noexcept { return static_cast<int>(children_.size()); }
  VertexId root() const noexcept { return root_; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  std::optional<VertexId> parent(VertexId v) const {
    if (parent_[v] < 0) return std::nullopt;
    return parent_[v];
  }
  bool is_leaf(VertexId v) const { return children_[v].empty() && v != root_; }
  /// Degree in the (unrooted) tree.
  int degree(VertexId v) const {
    return static_cast<int>(children_[v].size()) + (parent_[v] < 0 ? 0 : 1);
  }
  /// Tree adjacency: parent first (if any), then children in order.
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<Edge> edges() const;
  Graph as_graph() const { return Graph{size(), edges()}; }

  /// Vertices in preorder (root first, children in embedding order).
  std::vector<VertexId> preorder() const;

  friend bool operator==(const EmbeddedTree&, const EmbeddedTree&) = default;

 private:
  friend EmbeddedTree build_embedded_tree(VertexId, const std::map<VertexId, std::vector<VertexId>>&,
                                          std::optional<int>);
  VertexId root_ = 0;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> parent_;
};

/// Builds a tree on 0..n-1. When n is absent it is inferred from the largest
/// id mentioned. Throws CycleDetected, DisconnectedInput or DuplicateChild.
EmbeddedTree build_embedded_tree(VertexId root,
                                 const std::map<VertexId, std::vector<VertexId>>& child_lists,
                                 std::optional<int> n = std::nullopt);

/// Leaves in depth-first, children-order sequence.
std::vector<VertexId> leaves_in_embedding_order(const EmbeddedTree& tree);

/// Empty when the tree can carry a Halin graph; otherwise one message per
/// violated condition.
std::vector<std::string> validate_halin_substrate(const EmbeddedTree& tree);

class HalinGraph {
 public:
  const EmbeddedTree& tree() const noexcept { return tree_; }
  const std::vector<VertexId>& cycle_order() const noexcept { return cycle_order_; }
  int size() const noexcept { return graph_.n; }
  int edge_count() const noexcept { return static_cast<int>(graph_.edges.size()); }
  /// All edges: tree edges first, then cycle edges.
  const Graph& graph() const noexcept { return graph_; }
  std::span<const Edge> tree_edges() const {
    return std::span<const Edge>(graph_.edges).first(static_cast<std::size_t>(graph_.n - 1));
  }
  std::span<const Edge> cycle_edges() const {
    return std::span<const Edge>(graph_.edges).subspan(static_cast<std::size_t>(graph_.n - 1));
  }
  /// Cycle neighbours of a leaf (previous, next) in cycle order.
  std::pair<VertexId, VertexId> cycle_neighbors(VertexId leaf) const;
  int degree(VertexId v) const;

  friend HalinGraph halin_from_tree(EmbeddedTree tree);

 private:
  EmbeddedTree tree_;
  std::vector<VertexId> cycle_order_;
  std::vector<int> cycle_index_;  // -1 for internal vertices
  Graph graph_;
};

/// Joins the leaves in embedding order into a cycle. Throws InvalidSubstrate.
HalinGraph halin_from_tree(EmbeddedTree tree);

}  // namespace halin
