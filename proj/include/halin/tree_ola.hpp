#pragma once

#include <cstdint>
#include <vector>

#include "halin/graph_core.hpp"
#include "halin/layout_ops.hpp"

namespace halin {

/// Vertex whose removal leaves components of size <= floor(n/2); the
/// smallest such id wins a tie.
VertexId central_vertex(const EmbeddedTree& tree);

struct RbtCertificate {
  std::vector<int> subtree_size;
  std::vector<char> balanced;  // per vertex: its own subtree is balanced
  bool verdict = false;
};

/// Checks, from the tree's root down, that siblings always head subtrees of
/// equal size.
RbtCertificate is_recursively_balanced(const EmbeddedTree& tree);

struct RbtOlaStats {
  std::int64_t visits = 0;
};

/// Optimal layout of a recursively balanced tree in O(n). Every subtree is a
/// contiguous block with its root placed between its children's blocks.
/// Throws NotRecursivelyBalanced.
Layout rbt_ola(const EmbeddedTree& tree, RbtOlaStats* stats = nullptr);

/// Same construction with children visited in a seeded random order at every
/// vertex. The result is another optimal tree layout, generally not aligned
/// with the embedding; used to feed the Halin rearrangement non-trivial input.
Layout shuffled_rbt_ola(const EmbeddedTree& tree, std::uint64_t seed);

/// Number of the `children` subtrees laid out before their root. The two
/// candidates are ceil((c+1)/2) and floor((c+1)/2) counted on the side away
/// from the parent; the cheaper one wins, ties go to the floor.
enum class Anchor { Free, ParentOnRight, ParentOnLeft };
int children_before_root(int children, Anchor anchor);

struct OracleOptions {
  int limit = 10;
  bool prune = true;
  std::size_t max_stored = 10000;
};

struct OracleResult {
  std::int64_t optimal_cost = 0;
  /// Sorted lexicographically by vertex order; capped at max_stored.
  std::vector<Layout> optimal_layouts;
  /// Exact number of optimal layouts, including those not stored.
  std::int64_t optimal_count = 0;
  std::int64_t states_explored = 0;
};

/// Exact minimum linear arrangement by exhaustive search, returning every
/// optimum. With pruning, only layouts whose first vertex id is below the
/// last are enumerated (reversals are added back) and prefixes are cut by an
/// admissible bound. Throws TooLarge when n > limit.
OracleResult brute_force_ola(const Graph& g, const OracleOptions& options = {});

/// Optima of an edge partition add up to a lower bound for the whole graph.
inline std::int64_t edge_disjoint_lower_bound(std::int64_t cost_g1, std::int64_t cost_g2) {
  return cost_g1 + cost_g2;
}

}  // namespace halin
