#include "halin/layout_ops.hpp"

#include <algorithm>
#include <string>

namespace halin {

Layout::Layout(std::vector<VertexId> vertex_at) : vertex_at_(std::move(vertex_at)) {
  const int n = size();
  position_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const VertexId v = vertex_at_[i];
    if (v < 0 || v >= n || position_[v] != 0)
      throw Error(ErrorKind::InvalidLayout, "layout is not a permutation of 0.." + std::to_string(n - 1));
    position_[v] = i + 1;
  }
}

Layout Layout::identity(int n) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  return Layout(std::move(order));
}

Layout Layout::reversed() const {
  return Layout(std::vector<VertexId>(vertex_at_.rbegin(), vertex_at_.rend()));
}

std::int64_t la_cost(std::span<const Edge> edges, const Layout& layout) {
  std::int64_t total = 0;
  for (const Edge& e : edges) total += expand(e, layout);
  return total;
}

ArrangementReport la_cost(const Graph& g, const Layout& layout) {
  ArrangementReport r;
  r.per_edge_expand.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    const auto x = expand(e, layout);
    r.per_edge_expand.push_back(x);
    (e.kind == EdgeKind::Tree ? r.tree_cost : r.cycle_cost) += x;
  }
  r.total_cost = r.tree_cost + r.cycle_cost;
  return r;
}

ArrangementReport la_cost(const HalinGraph& h, const Layout& layout) {
  return la_cost(h.graph(), layout);
}

bool is_of_type(const Layout& layout, const BlockPartition& blocks) {
  int prev_max = 0;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    int lo = layout.size() + 1;
    int hi = 0;
    for (VertexId v : block) {
      lo = std::min(lo, layout.position(v));
      hi = std::max(hi, layout.position(v));
    }
    if (lo < prev_max) return false;
    prev_max = hi;
  }
  return true;
}

namespace {

struct Range {
  int first;  // 0-based, inclusive
  int last;   // exclusive
};

Range contiguous_range(const Layout& layout, std::span<const VertexId> block) {
  if (block.empty()) throw Error(ErrorKind::NotContiguous, "empty block");
  int lo = layout.size() + 1;
  int hi = 0;
  for (VertexId v : block) {
    lo = std::min(lo, layout.position(v));
    hi = std::max(hi, layout.position(v));
  }
  if (hi - lo + 1 != static_cast<int>(block.size()))
    throw Error(ErrorKind::NotContiguous, "block does not occupy a contiguous position range");
  return {lo - 1, hi};
}

}  // namespace

void swap_ranges_in_place(std::vector<VertexId>& order, int a_first, int a_last, int b_first, int b_last) {
  if (b_first < a_first) {
    std::swap(a_first, b_first);
    std::swap(a_last, b_last);
  }
  if (a_last > b_first) throw Error(ErrorKind::Overlapping, "blocks overlap");
  auto base = order.begin();
  // [A][gap][B] -> [B][gap][A]
  std::rotate(base + a_first, base + b_first, base + b_last);  // [B][A][gap]
  const int len_b = b_last - b_first;
  const int len_a = a_last - a_first;
  std::rotate(base + a_first + len_b, base + a_first + len_b + len_a, base + b_last);  // [B][gap][A]
}

void reverse_range_in_place(std::vector<VertexId>& order, int first, int last) {
  std::reverse(order.begin() + first, order.begin() + last);
}

Layout sigma_swap(const Layout& layout, std::span<const VertexId> a, std::span<const VertexId> b) {
  const Range ra = contiguous_range(layout, a);
  const Range rb = contiguous_range(layout, b);
  if (ra.first < rb.last && rb.first < ra.last) throw Error(ErrorKind::Overlapping, "blocks overlap");
  auto order = layout.order();
  swap_ranges_in_place(order, ra.first, ra.last, rb.first, rb.last);
  return Layout(std::move(order));
}

Layout reverse_block(const Layout& layout, std::span<const VertexId> block) {
  const Range r = contiguous_range(layout, block);
  auto order = layout.order();
  reverse_range_in_place(order, r.first, r.last);
  return Layout(std::move(order));
}

std::vector<VertexId> spinal_path(const EmbeddedTree& tree, const Layout& layout) {
  const int n = layout.size();
  if (n == 0) return {};
  const VertexId from = layout.at(1);
  const VertexId to = layout.at(n);
  // Lift both endpoints to their lowest common ancestor.
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (VertexId v : tree.preorder())
    for (VertexId c : tree.children(v)) depth[c] = depth[v] + 1;
  std::vector<VertexId> up{from};
  std::vector<VertexId> down{to};
  VertexId a = from;
  VertexId b = to;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      a = *tree.parent(a);
      up.push_back(a);
    } else {
      b = *tree.parent(b);
      down.push_back(b);
    }
  }
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int delta_count(const Layout& layout, std::optional<VertexId> lo, std::optional<VertexId> hi,
                std::span<const VertexId> set) {
  const int lo_pos = lo ? layout.position(*lo) : 0;
  const int hi_pos = hi ? layout.position(*hi) : layout.size() + 1;
  int count = 0;
  for (VertexId u : set) {
    const int p = layout.position(u);
    if (lo_pos < p && p < hi_pos) ++count;
  }
  return count;
}

SpinalDecomposition spinal_decomposition(const EmbeddedTree& tree, const Layout& layout) {
  SpinalDecomposition d;
  d.path = spinal_path(tree, layout);
  const int n = tree.size();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < d.path.size(); ++i) owner[d.path[i]] = static_cast<int>(i);

  d.subtrees.reserve(d.path.size());
  for (std::size_t i = 0; i < d.path.size(); ++i) {
    SpinalSubtree st;
    const VertexId w = d.path[i];
    st.spine_vertex = w;
    st.vertices.push_back(w);
    for (VertexId anchor : tree.neighbors(w)) {
      if (owner[anchor] >= 0) continue;  // spinal edge
      Branch br;
      br.anchor = anchor;
      std::vector<VertexId> stack{anchor};
      owner[anchor] = static_cast<int>(i);
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        br.vertices.push_back(v);
        for (VertexId x : tree.neighbors(v)) {
          if (owner[x] >= 0) continue;
          owner[x] = static_cast<int>(i);
          stack.push_back(x);
        }
      }
      st.vertices.insert(st.vertices.end(), br.vertices.begin(), br.vertices.end());
      st.branches.push_back(std::move(br));
    }
    d.subtrees.push_back(std::move(st));
  }
  return d;
}

}  // namespace halin
