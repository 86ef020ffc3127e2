#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecycles/leaf_set.hpp"

namespace treecycles {

// Position of an internal node in the canonical node order of a tree.
// 1-based; NodeRef{1} is always the root.
struct NodeRef {
  int index = 1;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

struct Subtree {
  bool is_leaf = true;
  int id = 0;  // leaf label, or 0-based canonical index of an internal node
  LeafSet leaves;
};

struct InternalNode {
  LeafSet leaves;
  std::array<Subtree, 2> children;  // child with the smaller minimum first
  int parent = -1;                  // 0-based; -1 at the root
  int depth = 0;                    // edges to the root
};

// Descendant leaf sets of the internal nodes, in canonical order.
struct LaminarFamily {
  std::vector<LeafSet> sets;
  friend bool operator==(const LaminarFamily&, const LaminarFamily&) = default;
};

// A marked trivalent tree of genus g, stored as the rooted full binary tree on
// leaves 1..g-1 obtained by deleting the root leaf g. The tree is identified
// with the laminar family of its internal-node leaf sets; internal nodes are
// kept in canonical order (see canonical_less).
class Tree {
 public:
  // Validates that `sets` is the family of a full binary tree on 1..leaf_count.
  static Tree from_sets(int leaf_count, std::vector<LeafSet> sets);
  static Tree from_family(const LaminarFamily& family);

  int genus() const { return leaf_count_ + 1; }
  int leaf_count() const { return leaf_count_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  LeafSet all_leaves() const { return nodes_.front().leaves; }

  std::span<const InternalNode> nodes() const { return nodes_; }
  const InternalNode& node(NodeRef ref) const;
  const InternalNode& root() const { return nodes_.front(); }
  std::vector<LeafSet> sets() const;
  std::optional<NodeRef> find(LeafSet leaves) const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  Tree() = default;

  int leaf_count_ = 0;
  std::vector<InternalNode> nodes_;
};

// TREE := LEAF | "(" TREE "," TREE ")"; LEAF := positive decimal integer.
// Whitespace is ignored and child order is irrelevant. When `genus` is given
// it must agree with the leaf count.
Tree parse_tree(std::string_view text, std::optional<int> genus = std::nullopt);
std::string render_tree(const Tree& t);

// All trees of genus g exactly once, sorted by rendered string.
std::vector<Tree> enumerate_trees(int g);

// True iff the two smallest labels below the node sit in different children.
bool is_balanced_node(const Tree& t, NodeRef v);
// Per-node balance flags in canonical order.
std::vector<bool> balance_report(const Tree& t);
bool is_balanced(const Tree& t);
// The balanced trees of genus g, sorted by rendered string.
std::vector<Tree> enumerate_balanced(int g);

LaminarFamily descendant_sets(const Tree& t);

}  // namespace treecycles
