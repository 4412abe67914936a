#include "halin/halin_ola.hpp"

#include <algorithm>
#include <string>

#include "halin/tree_ola.hpp"

namespace halin {

std::int64_t halin_lower_bound(const HalinGraph& h, std::int64_t tree_opt_cost) {
  return 2 * static_cast<std::int64_t>(h.size() - 1) + tree_opt_cost;
}

bool cycle_cost_is_tight(const HalinGraph& h, const Layout& layout) {
  return la_cost(h.cycle_edges(), layout) == 2 * static_cast<std::int64_t>(h.size() - 1);
}

Layout replay_trace(const Layout& layout, const SwapTrace& trace) {
  auto order = layout.order();
  for (const SwapStep& s : trace.steps) {
    const int a = s.first_a - 1;
    const int b = s.first_b - 1;
    swap_ranges_in_place(order, a, a + s.length, b, b + s.length);
    if (s.reversed) {
      reverse_range_in_place(order, a, a + s.length);
      reverse_range_in_place(order, b, b + s.length);
    }
  }
  return Layout(std::move(order));
}

namespace {

class Rearranger {
 public:
  Rearranger(const HalinGraph& h, const Layout& tree_ola)
      : h_(h), t_(h.tree()), n_(h.size()), order_(tree_ola.order()), pos_(static_cast<std::size_t>(n_)) {
    for (int i = 0; i < n_; ++i) pos_[order_[i]] = i;
  }

  RearrangeResult run() {
    const auto pre = t_.preorder();
    const auto cert = is_recursively_balanced(t_);
    size_ = cert.subtree_size;
    height_.assign(static_cast<std::size_t>(n_), 1);
    first_leaf_.assign(static_cast<std::size_t>(n_), 0);
    last_leaf_.assign(static_cast<std::size_t>(n_), 0);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
      const VertexId v = *it;
      const auto ch = t_.children(v);
      if (ch.empty()) {
        first_leaf_[v] = last_leaf_[v] = v;
        continue;
      }
      for (VertexId c : ch) height_[v] = std::max(height_[v], height_[c] + 1);
      first_leaf_[v] = first_leaf_[ch.front()];
      last_leaf_[v] = last_leaf_[ch.back()];
    }
    start_.assign(static_cast<std::size_t>(n_), 0);

    std::vector<std::vector<VertexId>> by_height(static_cast<std::size_t>(height_[t_.root()] + 1));
    for (VertexId v : pre) by_height[height_[v]].push_back(v);
    for (int hgt = height_[t_.root()]; hgt >= 2; --hgt)
      for (VertexId u : by_height[hgt]) arrange(u);

    return {Layout(std::move(order_)), std::move(trace_)};
  }

 private:
  void arrange(VertexId u) {
    const auto ch = t_.children(u);
    const int p = static_cast<int>(ch.size());
    const int s = start_[u];
    const int cs = size_[ch.front()];
    const int before = (pos_[u] - s) / cs;
    auto slot_start = [&](int m) { return m < before ? s + m * cs : s + m * cs + 1; };

    // child index (embedding order) held by each slot, and the inverse
    std::vector<int> slot_child(static_cast<std::size_t>(p));
    std::vector<int> child_slot(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
      const int pc = pos_[ch[i]];
      const int m = pc < pos_[u] ? (pc - s) / cs : before + (pc - pos_[u] - 1) / cs;
      slot_child[m] = i;
      child_slot[i] = m;
    }

    std::vector<int> target(static_cast<std::size_t>(p));
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(p));
    if (u == t_.root()) {
      // Block order becomes the cycle order read backwards from whichever
      // subtree sits leftmost; its successor closes the chain on the right.
      const int lead = slot_child[0];
      for (int m = 0; m < p; ++m) target[m] = ((lead - m) % p + p) % p;
      visit.push_back(p - 1);
      for (int m = 1; m < p - 1; ++m) visit.push_back(m);
    } else {
      const int pa = pos_[h_.cycle_neighbors(first_leaf_[u]).first];
      const int pb = pos_[h_.cycle_neighbors(last_leaf_[u]).second];
      const bool left = s == 0;
      const bool right = s + size_[u] == n_;
      // Middle blocks put the arc end whose outside neighbour is on the left
      // first. Boundary blocks put the arc end with the farther neighbour at
      // the layout's end.
      const bool forward = (left || right) ? pa > pb : pa < pb;
      for (int m = 0; m < p; ++m) target[m] = forward ? m : p - 1 - m;
      if (left) {
        for (int m = 0; m < p; ++m) visit.push_back(m);
      } else if (right) {
        for (int m = p - 1; m >= 0; --m) visit.push_back(m);
      } else {
        for (int lo = 0, hi = p - 1; lo <= hi; ++lo, --hi) {
          visit.push_back(lo);
          if (hi != lo) visit.push_back(hi);
        }
      }
    }

    for (int m : visit) {
      const int want = target[m];
      const int cur = child_slot[want];
      if (cur == m) continue;
      exchange(u, slot_start(std::min(m, cur)), slot_start(std::max(m, cur)), cs,
               (std::min(m, cur) < before) != (std::max(m, cur) < before));
      const int displaced = slot_child[m];
      slot_child[m] = want;
      child_slot[want] = m;
      slot_child[cur] = displaced;
      child_slot[displaced] = cur;
    }
    for (int m = 0; m < p; ++m) start_[ch[slot_child[m]]] = slot_start(m);
  }

  void exchange(VertexId u, int a, int b, int len, bool reversed) {
    swap_ranges_in_place(order_, a, a + len, b, b + len);
    if (reversed) {
      reverse_range_in_place(order_, a, a + len);
      reverse_range_in_place(order_, b, b + len);
    }
    for (int i = 0; i < len; ++i) {
      pos_[order_[a + i]] = a + i;
      pos_[order_[b + i]] = b + i;
    }
    trace_.steps.push_back({height_[u], a + 1, b + 1, len, reversed});
    trace_.total_moved_vertices += 2 * len;
  }

  const HalinGraph& h_;
  const EmbeddedTree& t_;
  int n_;
  std::vector<VertexId> order_;
  std::vector<int> pos_;
  std::vector<int> size_;
  std::vector<int> height_;
  std::vector<VertexId> first_leaf_;
  std::vector<VertexId> last_leaf_;
  std::vector<int> start_;
  SwapTrace trace_;
};

// Every subtree must occupy one contiguous range of positions.
bool is_nested(const EmbeddedTree& t, const Layout& layout, const std::vector<int>& size) {
  const auto pre = t.preorder();
  std::vector<int> lo(static_cast<std::size_t>(t.size()));
  std::vector<int> hi(static_cast<std::size_t>(t.size()));
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const VertexId v = *it;
    lo[v] = hi[v] = layout.position(v);
    for (VertexId c : t.children(v)) {
      lo[v] = std::min(lo[v], lo[c]);
      hi[v] = std::max(hi[v], hi[c]);
    }
    if (hi[v] - lo[v] + 1 != size[v]) return false;
  }
  return true;
}

}  // namespace

RearrangeResult rearrange_to_halin_ola(const HalinGraph& h, const Layout& tree_ola) {
  const auto& t = h.tree();
  if (tree_ola.size() != h.size())
    throw Error(ErrorKind::InvalidLayout, "layout has " + std::to_string(tree_ola.size()) + " positions, graph has " +
                                              std::to_string(h.size()) + " vertices");
  const auto cert = is_recursively_balanced(t);
  if (!cert.verdict) throw Error(ErrorKind::NotRecursivelyBalanced, "underlying tree is not recursively balanced");
  const auto tree_edges = h.tree_edges();
  const auto optimum = la_cost(tree_edges, rbt_ola(t));
  const auto given = la_cost(tree_edges, tree_ola);
  if (given != optimum)
    throw Error(ErrorKind::NotTreeOptimalInput,
                "tree layout costs " + std::to_string(given) + ", tree optimum is " + std::to_string(optimum));
  if (!is_nested(t, tree_ola, cert.subtree_size))
    throw Error(ErrorKind::UnsupportedTreeLayout, "tree layout does not keep every subtree contiguous");
  return Rearranger(h, tree_ola).run();
}

namespace {

void lay_out_subtree(const EmbeddedTree& t, VertexId v, Anchor anchor, std::vector<VertexId>& out) {
  const auto ch = t.children(v);
  const int before = children_before_root(static_cast<int>(ch.size()), anchor);
  for (int i = 0; i < before; ++i) lay_out_subtree(t, ch[i], Anchor::ParentOnRight, out);
  out.push_back(v);
  for (int i = before; i < static_cast<int>(ch.size()); ++i) lay_out_subtree(t, ch[i], Anchor::ParentOnLeft, out);
}

}  // namespace

Layout direct_rbt_halin_ola(const HalinGraph& h) {
  const auto& t = h.tree();
  if (!is_recursively_balanced(t).verdict)
    throw Error(ErrorKind::NotRecursivelyBalanced, "underlying tree is not recursively balanced");
  // Children in embedding order at every level: consecutive blocks are
  // joined by a cycle edge, the leaves read left to right follow the cycle,
  // and the closing edge spans positions 1..n.
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(h.size()));
  lay_out_subtree(t, t.root(), Anchor::Free, out);
  return Layout(std::move(out));
}

OlaCertificate certify(const HalinGraph& h, const Layout& layout, std::int64_t tree_opt_cost,
                       std::optional<std::int64_t> oracle_cost) {
  OlaCertificate c;
  const auto report = la_cost(h, layout);
  c.layout_cost = report.total_cost;
  c.tree_cost = report.tree_cost;
  c.cycle_cost = report.cycle_cost;
  c.lower_bound = halin_lower_bound(h, tree_opt_cost);
  c.oracle_cost = oracle_cost;
  const auto cost = std::to_string(c.layout_cost);
  const auto bound = std::to_string(c.lower_bound);
  if (c.layout_cost < c.lower_bound) {
    c.reason = "cost " + cost + " < bound " + bound + ": supplied tree optimum is not a true optimum";
  } else if (c.layout_cost == c.lower_bound) {
    c.optimal = true;
    c.reason = "cost " + cost + " meets lower bound " + bound;
  } else if (oracle_cost) {
    const auto exact = std::to_string(*oracle_cost);
    c.optimal = c.layout_cost == *oracle_cost;
    c.reason = c.optimal ? "cost " + cost + " equals exact optimum " + exact + " (bound " + bound + " not attained)"
                         : "cost " + cost + " > exact optimum " + exact;
  } else {
    c.reason = "cost " + cost + " > bound " + bound;
  }
  return c;
}

}  // namespace halin
