#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecycles/decomposition.hpp"
#include "treecycles/tree.hpp"

namespace treecycles {

// A tree whose internal nodes carry explicit positions 1..g-2. The ordering
// fixes the sign of the tree's abelian cycle.
class OrderedTree {
 public:
  // Canonical ordering.
  explicit OrderedTree(Tree t);
  // columns[p] is the leaf set of the node at position p+1.
  static OrderedTree from_columns(int leaf_count, std::vector<LeafSet> columns);

  const Tree& tree() const { return tree_; }
  std::span<const LeafSet> columns() const { return columns_; }
  // 1-based position of the node with this leaf set; 0 when absent.
  int position_of(LeafSet leaves) const;
  // Sign of the permutation from canonical order to this ordering.
  int parity() const;

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.columns_ == b.columns_; }

 private:
  OrderedTree(Tree t, std::vector<LeafSet> columns) : tree_(std::move(t)), columns_(std::move(columns)) {}

  Tree tree_;
  std::vector<LeafSet> columns_;
};

// The two re-associations of the subtrees u1, u2, v2 hanging below a node v
// whose child v1 = (u1, u2) is internal. The node v1 keeps its position in
// both results while its leaf set changes; every other node keeps both.
struct Rotation {
  OrderedTree first;   // v = ((u1, v2), u2)
  OrderedTree second;  // v = ((v2, u2), u1)
  int moved_position = 0;  // position of v1
  int pivot_position = 0;  // position of v
};

// v1 is the child holding v's two smallest labels when v is unbalanced, and
// otherwise the first internal child in canonical order.
Rotation rotate(const OrderedTree& t, NodeRef v);
// Rotation about an explicitly chosen internal child `inner` of `v`.
Rotation rotate(const OrderedTree& t, NodeRef v, NodeRef inner);
std::pair<Tree, Tree> rotate(const Tree& t, NodeRef v);

// Deepest unbalanced node, ties broken by the smaller canonical index.
std::optional<NodeRef> find_unbalanced(const Tree& t);

// Three aligned trees that agree at every position except `s`, where they hold
// B2|B3, B3|B1 and B1|B2, with B1|B2|B3 at position `t`.
struct CyclicTriple {
  std::array<OrderedTree, 3> trees;
  LeafSet b1, b2, b3;
  int s = 0;
  int t = 0;
};

// Checks the aligned conditions directly on the given orderings.
std::optional<CyclicTriple> match_cyclic_triple(const OrderedTree& t1, const OrderedTree& t2,
                                                const OrderedTree& t3);
// Finds the alignment (positions taken from t1's canonical order) if one exists.
std::optional<CyclicTriple> is_cyclic_triple(const Tree& t1, const Tree& t2, const Tree& t3);

// For every k, the aligned determinants of the three trees sum to zero.
bool verify_cyclic_determinant_identity(const CyclicTriple& triple);

// Integer combination of the canonically ordered cycles of balanced trees.
struct SignedTreeSum {
  int genus = 3;
  std::map<Tree, std::int64_t> terms;

  friend bool operator==(const SignedTreeSum&, const SignedTreeSum&) = default;
};

// Re-expresses a SignedTreeSum in the basis B_k (construction ordering).
CycleDecomposition to_k_coordinates(const SignedTreeSum& sum);

struct RotationStep {
  int at = 0;  // canonical index of the rotated node v
  std::array<std::string, 3> triple;
};

// Rewrites a tree's cycle into balanced trees with A_T = -A_T' - A_T''.
// Reductions are memoized per canonical tree, so a shared Reducer reduces
// each tree at most once.
class Reducer {
 public:
  explicit Reducer(bool record_trace = false) : record_trace_(record_trace) {}

  SignedTreeSum reduce(const Tree& t);

  const std::vector<RotationStep>& trace() const { return trace_; }
  // Rotations performed by the most recent reduce call.
  std::int64_t last_rotation_count() const { return rotations_; }

 private:
  using Terms = std::map<Tree, std::int64_t>;
  const Terms& reduce_canonical(const Tree& t);

  bool record_trace_;
  std::map<Tree, Terms> memo_;
  std::vector<RotationStep> trace_;
  std::int64_t rotations_ = 0;
  std::int64_t rotation_limit_ = 0;
};

SignedTreeSum reduce_to_balanced(const Tree& t, std::vector<RotationStep>* trace = nullptr);

}  // namespace treecycles
