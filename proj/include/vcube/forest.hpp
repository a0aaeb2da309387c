#pragma once

// Planar forests with leaves labelled by [n]: text form, canonical form,
// enumeration, and the flip / delete / insert edge operations.
//
// An internal edge is represented by its upper endpoint, an Internal node.
// Each Internal node carries an EdgeId that survives flips and the deletion
// of other edges.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcube/types.hpp"

namespace vcube {

class ForestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeId {
  int value = -1;
  friend constexpr bool operator==(EdgeId, EdgeId) = default;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Node {
  int label = 0;  // > 0 for a leaf
  EdgeId id;      // internal nodes only
  std::vector<Node> children;

  static Node leaf(int label) { return Node{label, {}, {}}; }
  static Node internal(std::vector<Node> children, EdgeId id = {}) { return Node{0, id, std::move(children)}; }

  bool is_leaf() const { return label > 0; }

  int min_label() const {
    if (is_leaf()) return label;
    int m = children.front().min_label();
    for (const auto& c : children) m = std::min(m, c.min_label());
    return m;
  }

  void append_leaves(OrderedSubset& out) const {
    if (is_leaf()) {
      out.push_back(label);
      return;
    }
    for (const auto& c : children) c.append_leaves(out);
  }

  OrderedSubset leaves() const {
    OrderedSubset out;
    append_leaves(out);
    return out;
  }

  /// Structural equality; edge ids are ignored.
  friend bool operator==(const Node& a, const Node& b) {
    return a.label == b.label && a.children == b.children;
  }
};

/// One rooted planar tree; the root itself is implicit and `top` is its child.
struct PlanarTree {
  Node top;
  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

class PlanarForest {
 public:
  PlanarForest() = default;

  /// Validates the node invariants and that the leaves are exactly [n].
  explicit PlanarForest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) { validate(); }

  int n() const { return n_; }
  const std::vector<PlanarTree>& trees() const { return trees_; }

  /// Structural equality (tree order matters, edge ids do not).
  friend bool operator==(const PlanarForest& a, const PlanarForest& b) { return a.trees_ == b.trees_; }

 private:
  void validate() {
    std::vector<int> labels;
    std::set<int> ids;
    std::function<void(const Node&)> walk = [&](const Node& node) {
      if (node.is_leaf()) {
        if (!node.children.empty()) throw ForestError("leaf with children");
        labels.push_back(node.label);
        return;
      }
      if (node.label < 0) throw ForestError("negative label");
      if (node.children.size() < 2) throw ForestError("internal node with fewer than two children");
      if (node.id.value >= 0 && !ids.insert(node.id.value).second)
        throw ForestError("duplicate edge id " + std::to_string(node.id.value));
      for (const auto& c : node.children) walk(c);
    };
    for (const auto& t : trees_) walk(t.top);
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0 && labels[i] == labels[i - 1]) throw ForestError("repeated leaf label " + std::to_string(labels[i]));
      if (labels[i] != static_cast<int>(i) + 1) throw ForestError("leaf labels are not exactly 1..n (missing " + std::to_string(i + 1) + ")");
    }
    n_ = static_cast<int>(labels.size());
    if (n_ == 0) throw ForestError("empty forest");
    if (n_ > kMaxLabels) throw ForestError("too many leaves");
    // Nodes without an id get fresh ones so every internal edge is addressable.
    int next = ids.empty() ? 0 : *ids.rbegin() + 1;
    std::function<void(Node&)> assign = [&](Node& node) {
      if (node.is_leaf()) return;
      if (node.id.value < 0) node.id = EdgeId{next++};
      for (auto& c : node.children) assign(c);
    };
    for (auto& t : trees_) assign(t.top);
  }

  std::vector<PlanarTree> trees_;
  int n_ = 0;
};

namespace detail {

inline void serialize_node(const Node& node, std::string& out) {
  if (node.is_leaf()) {
    out += std::to_string(node.label);
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ' ';
    serialize_node(node.children[i], out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<PlanarTree> forest() {
    std::vector<PlanarTree> trees;
    skip_spaces();
    trees.push_back(PlanarTree{tree()});
    skip_spaces();
    while (peek() == ',') {
      ++pos_;
      skip_spaces();
      trees.push_back(PlanarTree{tree()});
      skip_spaces();
    }
    if (pos_ != text_.size()) fail("unexpected character");
    return trees;
  }

 private:
  Node tree() {
    if (peek() == '(') return node();
    return leaf();
  }

  Node node() {
    ++pos_;  // '('
    std::vector<Node> children;
    children.push_back(tree());
    while (peek() == ' ') {
      skip_spaces();
      if (peek() == ')') fail("trailing space in group");
      children.push_back(tree());
    }
    if (peek() != ')') fail("expected ')' or ' '");
    ++pos_;
    if (children.size() < 2) fail("group with a single child");
    return Node::internal(std::move(children));
  }

  Node leaf() {
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxLabels) fail("leaf label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a leaf label or '('");
    if (value < 1) fail("leaf labels start at 1");
    return Node::leaf(static_cast<int>(value));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_spaces() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ForestError("syntax error at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Node mirrored(Node node) {
  if (node.is_leaf()) return node;
  std::reverse(node.children.begin(), node.children.end());
  for (auto& c : node.children) c = mirrored(std::move(c));
  return node;
}

inline bool contains_edge(const Node& node, EdgeId e) {
  if (node.is_leaf()) return false;
  if (node.id == e) return true;
  return std::any_of(node.children.begin(), node.children.end(), [&](const Node& c) { return contains_edge(c, e); });
}

inline const Node* find_edge(const Node& node, EdgeId e) {
  if (node.is_leaf()) return nullptr;
  if (node.id == e) return &node;
  for (const auto& c : node.children)
    if (const Node* hit = find_edge(c, e)) return hit;
  return nullptr;
}

inline Node* find_edge(Node& node, EdgeId e) {
  return const_cast<Node*>(find_edge(static_cast<const Node&>(node), e));
}

inline void collect_edges(const Node& node, std::vector<EdgeId>& out) {
  if (node.is_leaf()) return;
  out.push_back(node.id);
  for (const auto& c : node.children) collect_edges(c, out);
}

inline bool splice_out(Node& parent, EdgeId e) {
  for (std::size_t i = 0; i < parent.children.size(); ++i) {
    Node& child = parent.children[i];
    if (child.is_leaf()) continue;
    if (child.id == e) {
      std::vector<Node> grand = std::move(child.children);
      parent.children.erase(parent.children.begin() + static_cast<std::ptrdiff_t>(i));
      parent.children.insert(parent.children.begin() + static_cast<std::ptrdiff_t>(i),
                             std::make_move_iterator(grand.begin()), std::make_move_iterator(grand.end()));
      return true;
    }
    if (splice_out(child, e)) return true;
  }
  return false;
}

inline int max_edge_id(const Node& node) {
  if (node.is_leaf()) return -1;
  int m = node.id.value;
  for (const auto& c : node.children) m = std::max(m, max_edge_id(c));
  return m;
}

inline Node* node_at(Node& top, const std::vector<std::size_t>& path) {
  Node* cur = &top;
  for (std::size_t step : path) {
    if (cur->is_leaf() || step >= cur->children.size()) throw ForestError("insertion path does not name an internal node");
    cur = &cur->children[step];
  }
  if (cur->is_leaf()) throw ForestError("insertion path ends at a leaf");
  return cur;
}

inline void renumber(Node& node, int& next) {
  if (node.is_leaf()) return;
  node.id = EdgeId{next++};
  for (auto& c : node.children) renumber(c, next);
}

}  // namespace detail

/// Trees sorted ascending by minimum leaf label. Edge ids are preserved.
inline PlanarForest canonicalize(const PlanarForest& f) {
  std::vector<PlanarTree> trees = f.trees();
  std::stable_sort(trees.begin(), trees.end(),
                   [](const PlanarTree& a, const PlanarTree& b) { return a.top.min_label() < b.top.min_label(); });
  return PlanarForest(std::move(trees));
}

inline bool is_canonical(const PlanarForest& f) { return canonicalize(f) == f; }

/// Canonical text: trees sorted by minimum label, joined by ','.
inline std::string serialize_forest(const PlanarForest& f) {
  PlanarForest c = canonicalize(f);
  std::string out;
  for (std::size_t i = 0; i < c.trees().size(); ++i) {
    if (i) out += ',';
    detail::serialize_node(c.trees()[i].top, out);
  }
  return out;
}

/// Parses the forest grammar. Trees are kept in written order and edge ids
/// are assigned depth-first in that order.
inline PlanarForest parse_forest(std::string_view text) {
  return PlanarForest(detail::Parser(text).forest());
}

/// Copy of f with edge ids reassigned 0, 1, ... in depth-first order.
inline PlanarForest renumbered(const PlanarForest& f) {
  std::vector<PlanarTree> trees = f.trees();
  int next = 0;
  for (auto& t : trees) detail::renumber(t.top, next);
  return PlanarForest(std::move(trees));
}

/// Internal edges, depth-first (pre-order), trees in stored order.
inline std::vector<EdgeId> internal_edges(const PlanarForest& f) {
  std::vector<EdgeId> out;
  for (const auto& t : f.trees()) detail::collect_edges(t.top, out);
  return out;
}

inline std::size_t edge_count(const PlanarForest& f) { return internal_edges(f).size(); }

inline const Node& edge_node(const PlanarForest& f, EdgeId e) {
  for (const auto& t : f.trees())
    if (const Node* hit = detail::find_edge(t.top, e)) return *hit;
  throw ForestError("unknown edge id " + std::to_string(e.value));
}

/// O(f, e): leaf labels above e in depth-first order.
inline OrderedSubset leaf_order(const PlanarForest& f, EdgeId e) { return edge_node(f, e).leaves(); }

/// L(f, e): the unordered label set above e.
inline TypeSet edge_type(const PlanarForest& f, EdgeId e) { return support(leaf_order(f, e)); }

/// Edge of f whose type is t, if any. Types of distinct edges of one forest are distinct.
inline std::optional<EdgeId> edge_with_type(const PlanarForest& f, TypeSet t) {
  for (EdgeId e : internal_edges(f))
    if (edge_type(f, e) == t) return e;
  return std::nullopt;
}

/// r_e: mirror the subtree hanging from e (inclusive).
inline PlanarForest flip(const PlanarForest& f, EdgeId e) {
  std::vector<PlanarTree> trees = f.trees();
  for (auto& t : trees) {
    if (Node* hit = detail::find_edge(t.top, e)) {
      *hit = detail::mirrored(std::move(*hit));
      return canonicalize(PlanarForest(std::move(trees)));
    }
  }
  throw ForestError("unknown edge id " + std::to_string(e.value));
}

/// d_e: collapse e into its parent, or split its tree when e is a root edge.
inline PlanarForest delete_edge(const PlanarForest& f, EdgeId e) {
  std::vector<PlanarTree> trees = f.trees();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    Node& top = trees[i].top;
    if (top.is_leaf()) continue;
    if (top.id == e) {
      std::vector<PlanarTree> split;
      for (auto& c : top.children) split.push_back(PlanarTree{std::move(c)});
      trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(i));
      trees.insert(trees.begin() + static_cast<std::ptrdiff_t>(i), std::make_move_iterator(split.begin()),
                   std::make_move_iterator(split.end()));
      return canonicalize(PlanarForest(std::move(trees)));
    }
    if (detail::splice_out(top, e)) return canonicalize(PlanarForest(std::move(trees)));
  }
  throw ForestError("unknown edge id " + std::to_string(e.value));
}

/// Delete every internal edge except e.
inline PlanarForest restrict_to_edge(const PlanarForest& f, EdgeId e) {
  edge_node(f, e);
  PlanarForest out = f;
  for (EdgeId g : internal_edges(f))
    if (g != e) out = delete_edge(out, g);
  return out;
}

/// Contiguous run of children of one internal node. `path` walks from the
/// tree's top node through child indices; empty means the top node itself.
struct NodeRangeSite {
  std::size_t tree = 0;
  std::vector<std::size_t> path;
  std::vector<std::size_t> children;
};

/// Whole trees (by index in the forest) gathered under a new root edge, in this order.
struct TreeSetSite {
  std::vector<std::size_t> trees;
};

using InsertionSite = std::variant<NodeRangeSite, TreeSetSite>;

struct Insertion {
  PlanarForest forest;
  EdgeId edge;
};

/// Inverse of delete_edge: adds a fresh edge e with delete_edge(result, e) == f.
inline Insertion insert_edge(const PlanarForest& f, const InsertionSite& site) {
  std::vector<PlanarTree> trees = f.trees();
  int fresh = -1;
  for (const auto& t : trees) fresh = std::max(fresh, detail::max_edge_id(t.top));
  EdgeId id{fresh + 1};

  if (const auto* range = std::get_if<NodeRangeSite>(&site)) {
    if (range->tree >= trees.size()) throw ForestError("insertion site names a missing tree");
    Node* parent = detail::node_at(trees[range->tree].top, range->path);
    const auto& sel = range->children;
    if (sel.size() < 2) throw ForestError("insertion range shorter than 2");
    for (std::size_t i = 1; i < sel.size(); ++i)
      if (sel[i] != sel[i - 1] + 1) throw ForestError("insertion range is not contiguous");
    if (sel.back() >= parent->children.size()) throw ForestError("insertion range out of bounds");
    if (sel.size() == parent->children.size()) throw ForestError("insertion range covers every child");
    auto first = parent->children.begin() + static_cast<std::ptrdiff_t>(sel.front());
    auto last = first + static_cast<std::ptrdiff_t>(sel.size());
    std::vector<Node> moved(std::make_move_iterator(first), std::make_move_iterator(last));
    parent->children.erase(first, last);
    parent->children.insert(parent->children.begin() + static_cast<std::ptrdiff_t>(sel.front()),
                            Node::internal(std::move(moved), id));
  } else {
    const auto& sel = std::get<TreeSetSite>(site).trees;
    if (sel.size() < 2) throw ForestError("insertion needs at least two trees");
    std::set<std::size_t> seen(sel.begin(), sel.end());
    if (seen.size() != sel.size()) throw ForestError("insertion names a tree twice");
    if (*seen.rbegin() >= trees.size()) throw ForestError("insertion site names a missing tree");
    std::vector<Node> tops;
    for (std::size_t i : sel) tops.push_back(trees[i].top);
    std::vector<PlanarTree> rest;
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (!seen.count(i)) rest.push_back(std::move(trees[i]));
    rest.push_back(PlanarTree{Node::internal(std::move(tops), id)});
    trees = std::move(rest);
  }
  return Insertion{canonicalize(PlanarForest(std::move(trees))), id};
}

/// Every valid insertion site of f (node ranges, then ordered tree selections).
inline std::vector<InsertionSite> insertion_sites(const PlanarForest& f) {
  std::vector<InsertionSite> out;
  const auto& trees = f.trees();
  std::function<void(std::size_t, const Node&, std::vector<std::size_t>&)> walk =
      [&](std::size_t tree, const Node& node, std::vector<std::size_t>& path) {
        if (node.is_leaf()) return;
        std::size_t m = node.children.size();
        for (std::size_t len = 2; len < m; ++len)
          for (std::size_t start = 0; start + len <= m; ++start) {
            NodeRangeSite s{tree, path, {}};
            for (std::size_t i = 0; i < len; ++i) s.children.push_back(start + i);
            out.emplace_back(std::move(s));
          }
        for (std::size_t i = 0; i < m; ++i) {
          path.push_back(i);
          walk(tree, node.children[i], path);
          path.pop_back();
        }
      };
  for (std::size_t t = 0; t < trees.size(); ++t) {
    std::vector<std::size_t> path;
    walk(t, trees[t].top, path);
  }
  // Ordered selections of >= 2 trees: subsets by bitmask, every ordering.
  std::size_t m = trees.size();
  if (m < 2 || m > 20) return out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) sel.push_back(i);
    do {
      out.emplace_back(TreeSetSite{sel});
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0, m = blocks.size(); b < m; ++b) {
      blocks[b].push_back(items[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({items[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

/// All planar trees whose leaves are exactly `labels`.
inline const std::vector<Node>& trees_over(const std::vector<int>& labels,
                                           std::map<std::vector<int>, std::vector<Node>>& memo) {
  if (auto it = memo.find(labels); it != memo.end()) return it->second;
  std::vector<Node> out;
  if (labels.size() == 1) {
    out.push_back(Node::leaf(labels.front()));
  } else {
    for (auto blocks : set_partitions(labels)) {
      if (blocks.size() < 2) continue;
      std::sort(blocks.begin(), blocks.end());
      do {
        std::vector<const std::vector<Node>*> choices;
        for (const auto& b : blocks) choices.push_back(&trees_over(b, memo));
        std::vector<std::size_t> pick(blocks.size(), 0);
        while (true) {
          std::vector<Node> children;
          for (std::size_t i = 0; i < blocks.size(); ++i) children.push_back((*choices[i])[pick[i]]);
          out.push_back(Node::internal(std::move(children)));
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == choices[i]->size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
      } while (std::next_permutation(blocks.begin(), blocks.end()));
    }
  }
  return memo.emplace(labels, std::move(out)).first->second;
}

inline std::size_t count_internal(const Node& node) {
  if (node.is_leaf()) return 0;
  std::size_t c = 1;
  for (const auto& ch : node.children) c += count_internal(ch);
  return c;
}

}  // namespace detail

inline constexpr int kMaxEnumerationLabels = 6;

/// Canonical representatives of PF_n(k), sorted by canonical text, edge ids
/// assigned depth-first.
inline std::vector<PlanarForest> enumerate_forests(int n, int k) {
  if (n < 1 || n > kMaxEnumerationLabels) throw std::out_of_range("enumerate_forests: n must be in 1.." + std::to_string(kMaxEnumerationLabels));
  if (k < 0 || k > n - 1) throw std::out_of_range("enumerate_forests: k must be in 0..n-1");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::map<std::vector<int>, std::vector<Node>> memo;
  std::map<std::string, PlanarForest> found;
  for (const auto& blocks : detail::set_partitions(all)) {
    std::vector<const std::vector<Node>*> choices;
    for (const auto& b : blocks) choices.push_back(&detail::trees_over(b, memo));
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
      std::size_t internal = 0;
      for (std::size_t i = 0; i < blocks.size(); ++i) internal += detail::count_internal((*choices[i])[pick[i]]);
      if (internal == static_cast<std::size_t>(k)) {
        std::vector<PlanarTree> trees;
        for (std::size_t i = 0; i < blocks.size(); ++i) trees.push_back(PlanarTree{(*choices[i])[pick[i]]});
        PlanarForest f = renumbered(canonicalize(PlanarForest(std::move(trees))));
        found.emplace(serialize_forest(f), std::move(f));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i]->size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::vector<PlanarForest> out;
  out.reserve(found.size());
  for (auto& [_, f] : found) out.push_back(std::move(f));
  return out;
}

/// The forest whose only internal edge has leaf order `a`; other labels are single-leaf trees.
inline PlanarForest single_edge_forest(int n, const OrderedSubset& a) {
  if (a.size() < 2 || has_repeats(a)) throw ForestError("single-edge forest needs >= 2 distinct labels");
  std::vector<Node> children;
  for (int l : a) {
    if (l < 1 || l > n) throw ForestError("label " + std::to_string(l) + " outside [n]");
    children.push_back(Node::leaf(l));
  }
  std::vector<PlanarTree> trees{PlanarTree{Node::internal(std::move(children))}};
  TypeSet used = support(a);
  for (int l = 1; l <= n; ++l)
    if (!used.contains(l)) trees.push_back(PlanarTree{Node::leaf(l)});
  return canonicalize(PlanarForest(std::move(trees)));
}

}  // namespace vcube
