#include "halin/graph_core.hpp"

#include <algorithm>
#include <string>

namespace halin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::DuplicateChild: return "DuplicateChild";
    case ErrorKind::InvalidSubstrate: return "InvalidSubstrate";
    case ErrorKind::InvalidLayout: return "InvalidLayout";
    case ErrorKind::NotContiguous: return "NotContiguous";
    case ErrorKind::Overlapping: return "Overlapping";
    case ErrorKind::NotRecursivelyBalanced: return "NotRecursivelyBalanced";
    case ErrorKind::NotTreeOptimalInput: return "NotTreeOptimalInput";
    case ErrorKind::UnsupportedTreeLayout: return "UnsupportedTreeLayout";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Graph path_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, EdgeKind::Tree});
  return g;
}

Graph cycle_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, EdgeKind::Cycle});
  return g;
}

Graph star_graph(int leaves) {
  Graph g{leaves + 1, {}};
  for (int i = 1; i <= leaves; ++i) g.edges.push_back({0, i, EdgeKind::Tree});
  return g;
}

Graph complete_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, EdgeKind::Tree});
  return g;
}

std::vector<VertexId> EmbeddedTree::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(children_[v].size() + 1);
  if (parent_[v] >= 0) out.push_back(parent_[v]);
  out.insert(out.end(), children_[v].begin(), children_[v].end());
  return out;
}

std::vector<Edge> EmbeddedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(children_.empty() ? 0 : children_.size() - 1);
  for (VertexId v : preorder())
    for (VertexId c : children_[v]) out.push_back({v, c, EdgeKind::Tree});
  return out;
}

std::vector<VertexId> EmbeddedTree::preorder() const {
  std::vector<VertexId> order;
  order.reserve(children_.size());
  if (children_.empty()) return order;
  std::vector<VertexId> stack{root_};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = children_[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

EmbeddedTree build_embedded_tree(VertexId root,
                                 const std::map<VertexId, std::vector<VertexId>>& child_lists,
                                 std::optional<int> n) {
  int count = n.value_or(0);
  if (!n) {
    VertexId hi = root;
    for (const auto& [v, ch] : child_lists) {
      hi = std::max(hi, v);
      for (VertexId c : ch) hi = std::max(hi, c);
    }
    count = hi + 1;
  }
  auto in_range = [&](VertexId v) { return v >= 0 && v < count; };
  if (!in_range(root))
    throw Error(ErrorKind::DisconnectedInput, "root " + std::to_string(root) + " out of range");

  EmbeddedTree t;
  t.root_ = root;
  t.children_.assign(static_cast<std::size_t>(count), {});
  t.parent_.assign(static_cast<std::size_t>(count), -1);

  for (const auto& [v, ch] : child_lists) {
    if (!in_range(v))
      throw Error(ErrorKind::DisconnectedInput, "vertex " + std::to_string(v) + " out of range");
    for (VertexId c : ch) {
      if (!in_range(c))
        throw Error(ErrorKind::DisconnectedInput, "vertex " + std::to_string(c) + " out of range");
      if (c == root || c == v)
        throw Error(ErrorKind::CycleDetected,
                    "vertex " + std::to_string(c) + " is an ancestor of its parent " + std::to_string(v));
      if (t.parent_[c] >= 0)
        throw Error(ErrorKind::DuplicateChild, "vertex " + std::to_string(c) + " listed as a child twice");
      t.parent_[c] = v;
    }
    t.children_[v] = ch;
  }

  std::vector<char> reached(static_cast<std::size_t>(count), 0);
  std::vector<VertexId> stack{root};
  reached[root] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId c : t.children_[v]) {
      reached[c] = 1;
      stack.push_back(c);
    }
  }
  for (VertexId v = 0; v < count; ++v) {
    if (reached[v]) continue;
    // Walk parent pointers: a loop means a detached cycle.
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    VertexId w = v;
    while (w >= 0 && !reached[w] && !seen[w]) {
      seen[w] = 1;
      w = t.parent_[w];
    }
    if (w >= 0 && seen[w])
      throw Error(ErrorKind::CycleDetected, "cycle through vertex " + std::to_string(w));
    throw Error(ErrorKind::DisconnectedInput, "vertex " + std::to_string(v) + " unreachable from root");
  }
  return t;
}

std::vector<VertexId> leaves_in_embedding_order(const EmbeddedTree& tree) {
  std::vector<VertexId> out;
  for (VertexId v : tree.preorder())
    if (tree.is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<std::string> validate_halin_substrate(const EmbeddedTree& tree) {
  std::vector<std::string> violations;
  if (tree.size() == 0) {
    violations.emplace_back("empty tree");
    return violations;
  }
  auto leaves = leaves_in_embedding_order(tree);
  if (leaves.size() < 3)
    violations.push_back("leaf count " + std::to_string(leaves.size()) + " < 3");
  auto root_children = tree.children(tree.root()).size();
  if (root_children < 3)
    violations.push_back("root " + std::to_string(tree.root()) + " has " + std::to_string(root_children) +
                         " children (needs >= 3)");
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (v == tree.root()) continue;
    auto c = tree.children(v).size();
    if (c == 1)
      violations.push_back("internal vertex " + std::to_string(v) + " has 1 child (needs >= 2)");
  }
  return violations;
}

std::pair<VertexId, VertexId> HalinGraph::cycle_neighbors(VertexId leaf) const {
  const int idx = cycle_index_[leaf];
  const int len = static_cast<int>(cycle_order_.size());
  return {cycle_order_[(idx + len - 1) % len], cycle_order_[(idx + 1) % len]};
}

int HalinGraph::degree(VertexId v) const {
  return tree_.degree(v) + (cycle_index_[v] >= 0 ? 2 : 0);
}

HalinGraph halin_from_tree(EmbeddedTree tree) {
  auto violations = validate_halin_substrate(tree);
  if (!violations.empty()) {
    std::string msg = "invalid Halin substrate:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw Error(ErrorKind::InvalidSubstrate, msg);
  }
  HalinGraph h;
  h.cycle_order_ = leaves_in_embedding_order(tree);
  h.cycle_index_.assign(static_cast<std::size_t>(tree.size()), -1);
  for (std::size_t i = 0; i < h.cycle_order_.size(); ++i)
    h.cycle_index_[h.cycle_order_[i]] = static_cast<int>(i);
  h.graph_ = tree.as_graph();
  const auto len = h.cycle_order_.size();
  for (std::size_t i = 0; i < len; ++i)
    h.graph_.edges.push_back({h.cycle_order_[i], h.cycle_order_[(i + 1) % len], EdgeKind::Cycle});
  h.tree_ = std::move(tree);
  return h;
}

}  // namespace halin
