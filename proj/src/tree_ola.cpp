#include "halin/tree_ola.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace halin {

VertexId central_vertex(const EmbeddedTree& tree) {
  const int n = tree.size();
  const auto order = tree.preorder();
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (auto p = tree.parent(*it)) size[*p] += size[*it];

  VertexId best = -1;
  for (VertexId v = 0; v < n; ++v) {
    int largest = n - size[v];
    for (VertexId c : tree.children(v)) largest = std::max(largest, size[c]);
    if (largest <= n / 2) {
      best = v;
      break;
    }
  }
  return best;
}

RbtCertificate is_recursively_balanced(const EmbeddedTree& tree) {
  const int n = tree.size();
  RbtCertificate cert;
  cert.subtree_size.assign(static_cast<std::size_t>(n), 1);
  cert.balanced.assign(static_cast<std::size_t>(n), 1);
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    const auto ch = tree.children(v);
    bool ok = true;
    for (VertexId c : ch) {
      cert.subtree_size[v] += cert.subtree_size[c];
      ok = ok && cert.balanced[c] && cert.subtree_size[c] == cert.subtree_size[ch.front()];
    }
    cert.balanced[v] = ok;
  }
  cert.verdict = n == 0 || cert.balanced[tree.root()];
  return cert;
}

int children_before_root(int children, Anchor anchor) {
  if (children == 0) return 0;
  const int hi = std::min(children, (children + 2) / 2);  // ceil((c+1)/2)
  const int lo = (children + 1) / 2;                      // floor((c+1)/2)
  // Root-to-child expands, in units of one child block: the i-th block out
  // from the root costs i-1, plus one block per child sitting between the
  // root and its parent.
  auto cost = [&](int before) {
    const int after = children - before;
    std::int64_t c = std::int64_t{before} * (before - 1) + std::int64_t{after} * (after - 1);
    if (anchor == Anchor::ParentOnRight) c += 2 * after;
    if (anchor == Anchor::ParentOnLeft) c += 2 * before;
    return c;
  };
  // Candidates count the far side; when the parent is on the left the far
  // side is the one after the root.
  auto to_before = [&](int far) { return anchor == Anchor::ParentOnLeft ? children - far : far; };
  const int b_lo = to_before(lo);
  const int b_hi = to_before(hi);
  return cost(b_hi) < cost(b_lo) ? b_hi : b_lo;
}

namespace {

template <typename ChildOrder>
Layout build_rbt_layout(const EmbeddedTree& tree, ChildOrder&& child_order, RbtOlaStats* stats) {
  const auto cert = is_recursively_balanced(tree);
  if (!cert.verdict)
    throw Error(ErrorKind::NotRecursivelyBalanced, "tree is not recursively balanced");
  std::int64_t visits = tree.size();  // the balance pass

  struct Item {
    VertexId v;
    Anchor anchor;
    bool emit;
  };
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(tree.size()));
  std::vector<Item> stack;
  if (tree.size() > 0) stack.push_back({tree.root(), Anchor::Free, false});
  std::vector<VertexId> kids;
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    ++visits;
    if (item.emit) {
      out.push_back(item.v);
      continue;
    }
    kids.assign(tree.children(item.v).begin(), tree.children(item.v).end());
    child_order(kids);
    const int p = static_cast<int>(kids.size());
    const int before = children_before_root(p, item.anchor);
    for (int i = p - 1; i >= before; --i) stack.push_back({kids[i], Anchor::ParentOnLeft, false});
    stack.push_back({item.v, item.anchor, true});
    for (int i = before - 1; i >= 0; --i) stack.push_back({kids[i], Anchor::ParentOnRight, false});
  }
  if (stats) stats->visits = visits;
  return Layout(std::move(out));
}

}  // namespace

Layout rbt_ola(const EmbeddedTree& tree, RbtOlaStats* stats) {
  return build_rbt_layout(tree, [](std::vector<VertexId>&) {}, stats);
}

Layout shuffled_rbt_ola(const EmbeddedTree& tree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return build_rbt_layout(
      tree,
      [&rng](std::vector<VertexId>& kids) {
        // Fisher-Yates on raw engine output keeps results identical across
        // standard libraries.
        for (std::size_t i = kids.size(); i > 1; --i) std::swap(kids[i - 1], kids[rng() % i]);
      },
      nullptr);
}

namespace {

class OracleSearch {
 public:
  OracleSearch(const Graph& g, const OracleOptions& opt)
      : n_(g.n), opt_(opt), adj_(static_cast<std::size_t>(g.n)), pos_(static_cast<std::size_t>(g.n), 0) {
    for (const Edge& e : g.edges) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    free_edges_ = static_cast<int>(g.edges.size());
    order_.reserve(static_cast<std::size_t>(n_));
    best_ = la_cost(g.edges, Layout::identity(n_));
  }

  OracleResult run() {
    descend();
    OracleResult r;
    r.optimal_cost = best_;
    r.optimal_count = count_;
    r.states_explored = states_;
    std::sort(stored_.begin(), stored_.end());
    r.optimal_layouts.reserve(stored_.size());
    for (auto& o : stored_) r.optimal_layouts.emplace_back(std::move(o));
    return r;
  }

 private:
  void place(VertexId w) {
    const int p = static_cast<int>(order_.size()) + 1;
    for (VertexId x : adj_[w]) {
      if (pos_[x]) {
        --crossing_;
        crossing_pos_sum_ -= pos_[x];
        fixed_ += p - pos_[x];
      } else {
        --free_edges_;
        ++crossing_;
        crossing_pos_sum_ += p;
      }
    }
    pos_[w] = p;
    order_.push_back(w);
  }

  void unplace(VertexId w) {
    order_.pop_back();
    pos_[w] = 0;
    const int p = static_cast<int>(order_.size()) + 1;
    for (VertexId x : adj_[w]) {
      if (pos_[x]) {
        ++crossing_;
        crossing_pos_sum_ += pos_[x];
        fixed_ -= p - pos_[x];
      } else {
        ++free_edges_;
        --crossing_;
        crossing_pos_sum_ -= p;
      }
    }
  }

  std::int64_t lower_bound() const {
    const std::int64_t placed = static_cast<std::int64_t>(order_.size());
    return fixed_ + crossing_ * (placed + 1) - crossing_pos_sum_ + free_edges_;
  }

  void record() {
    const std::int64_t cost = fixed_;
    if (cost < best_) {
      best_ = cost;
      count_ = 0;
      stored_.clear();
    }
    if (cost != best_) return;
    const bool mirrored = opt_.prune && n_ >= 2;
    count_ += mirrored ? 2 : 1;
    if (stored_.size() < opt_.max_stored) stored_.push_back(order_);
    if (mirrored && stored_.size() < opt_.max_stored)
      stored_.emplace_back(order_.rbegin(), order_.rend());
  }

  void descend() {
    ++states_;
    const int depth = static_cast<int>(order_.size());
    if (depth == n_) {
      if (!opt_.prune || n_ < 2 || order_.front() < order_.back()) record();
      return;
    }
    if (opt_.prune) {
      if (lower_bound() > best_) return;
      // Some unplaced vertex must outrank the first one to close the layout.
      if (depth >= 1 && above_first_ == 0) return;
    }
    for (VertexId w = 0; w < n_; ++w) {
      if (pos_[w]) continue;
      place(w);
      if (depth == 0) {
        above_first_ = n_ - 1 - w;
      } else if (w > order_.front()) {
        --above_first_;
      }
      descend();
      if (depth != 0 && w > order_.front()) ++above_first_;
      unplace(w);
    }
  }

  int n_;
  OracleOptions opt_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> pos_;
  std::vector<VertexId> order_;
  std::int64_t fixed_ = 0;
  std::int64_t crossing_pos_sum_ = 0;
  std::int64_t crossing_ = 0;
  std::int64_t free_edges_ = 0;
  int above_first_ = 0;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  std::int64_t count_ = 0;
  std::int64_t states_ = 0;
  std::vector<std::vector<VertexId>> stored_;
};

}  // namespace

OracleResult brute_force_ola(const Graph& g, const OracleOptions& options) {
  if (g.n > options.limit)
    throw Error(ErrorKind::TooLarge, "oracle limit is " + std::to_string(options.limit) + " vertices, graph has " +
                                         std::to_string(g.n));
  return OracleSearch(g, options).run();
}

}  // namespace halin
