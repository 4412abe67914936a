#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halin/graph_core.hpp"
#include "halin/layout_ops.hpp"

namespace halin {

/// 2(n-1) plus the optimal cost of the underlying tree.
std::int64_t halin_lower_bound(const HalinGraph& h, std::int64_t tree_opt_cost);

/// True iff the cycle edges of `h` cost exactly 2(n-1) under `layout`.
bool cycle_cost_is_tight(const HalinGraph& h, const Layout& layout);

/// One block exchange performed by the rearrangement. Ranges are 1-based
/// start positions with a common length; `reversed` marks an exchange across
/// the subtree root, after which both blocks are mirrored in place.
struct SwapStep {
  int level_height = 0;
  int first_a = 0;
  int first_b = 0;
  int length = 0;
  bool reversed = false;
};

struct SwapTrace {
  std::vector<SwapStep> steps;
  std::int64_t total_moved_vertices = 0;

  std::size_t total_swaps() const noexcept { return steps.size(); }
};

/// Applies `trace` to `layout` step by step.
Layout replay_trace(const Layout& layout, const SwapTrace& trace);

struct RearrangeResult {
  Layout layout;
  SwapTrace trace;
};

/// Turns an optimal layout of the recursively balanced tree under `h` into an
/// optimal layout of `h` by exchanging equal-size sibling subtrees, top level
/// first, then every subtree by decreasing height. The tree cost never
/// changes; the cycle ends up costing 2(n-1).
///
/// Throws NotRecursivelyBalanced, NotTreeOptimalInput (tree cost differs from
/// the optimum), or UnsupportedTreeLayout (some subtree is not a contiguous
/// block).
RearrangeResult rearrange_to_halin_ola(const HalinGraph& h, const Layout& tree_ola);

/// Builds the same optimum directly: subtrees in embedding order, each root
/// between its children. Throws NotRecursivelyBalanced.
Layout direct_rbt_halin_ola(const HalinGraph& h);

struct OlaCertificate {
  std::int64_t layout_cost = 0;
  std::int64_t lower_bound = 0;
  std::int64_t tree_cost = 0;
  std::int64_t cycle_cost = 0;
  std::optional<std::int64_t> oracle_cost;
  bool optimal = false;
  std::string reason;
};

/// Optimal when the cost meets the lower bound, or when it matches an
/// attached exact optimum. A cost above the bound with no oracle attached
/// is reported as uncertified, not as suboptimal.
OlaCertificate certify(const HalinGraph& h, const Layout& layout, std::int64_t tree_opt_cost,
                       std::optional<std::int64_t> oracle_cost = std::nullopt);

}  // namespace halin
