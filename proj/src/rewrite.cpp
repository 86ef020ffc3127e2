#include "treecycles/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "treecycles/error.hpp"

namespace treecycles {

OrderedTree::OrderedTree(Tree t) : tree_(std::move(t)), columns_(tree_.sets()) {}

OrderedTree OrderedTree::from_columns(int leaf_count, std::vector<LeafSet> columns) {
  Tree t = Tree::from_sets(leaf_count, columns);
  return OrderedTree(std::move(t), std::move(columns));
}

int OrderedTree::position_of(LeafSet leaves) const {
  for (std::size_t p = 0; p < columns_.size(); ++p) {
    if (columns_[p] == leaves) return static_cast<int>(p) + 1;
  }
  return 0;
}

int OrderedTree::parity() const {
  std::vector<int> images;
  images.reserve(columns_.size());
  for (const InternalNode& n : tree_.nodes()) images.push_back(position_of(n.leaves));
  int sign = 1;
  for (std::size_t a = 0; a < images.size(); ++a) {
    while (images[a] != static_cast<int>(a) + 1) {
      std::swap(images[a], images[static_cast<std::size_t>(images[a] - 1)]);
      sign = -sign;
    }
  }
  return sign;
}

Rotation rotate(const OrderedTree& t, NodeRef v, NodeRef inner) {
  const Tree& tree = t.tree();
  const InternalNode& pivot = tree.node(v);
  const InternalNode& v1 = tree.node(inner);
  if (v1.parent != v.index - 1) {
    throw DomainError("node " + v1.leaves.to_string() + " is not a child of " + pivot.leaves.to_string());
  }
  const LeafSet u1 = v1.children[0].leaves;
  const LeafSet u2 = v1.children[1].leaves;
  const LeafSet v2 = pivot.leaves - v1.leaves;
  const int moved = t.position_of(v1.leaves);

  std::vector<LeafSet> first(t.columns().begin(), t.columns().end());
  std::vector<LeafSet> second = first;
  first[static_cast<std::size_t>(moved - 1)] = u1 | v2;
  second[static_cast<std::size_t>(moved - 1)] = v2 | u2;
  return Rotation{OrderedTree::from_columns(tree.leaf_count(), std::move(first)),
                  OrderedTree::from_columns(tree.leaf_count(), std::move(second)), moved,
                  t.position_of(pivot.leaves)};
}

Rotation rotate(const OrderedTree& t, NodeRef v) {
  const InternalNode& pivot = t.tree().node(v);
  const auto& [left, right] = pivot.children;
  const Subtree* inner = nullptr;
  if (!is_balanced_node(t.tree(), v)) {
    inner = &left;  // holds the minimum, hence both smallest labels
  } else if (!left.is_leaf) {
    inner = &left;
  } else if (!right.is_leaf) {
    inner = &right;
  }
  if (inner == nullptr) {
    throw DomainError("node " + pivot.leaves.to_string() + " has two leaf children; no rotation");
  }
  return rotate(t, v, NodeRef{inner->id + 1});
}

std::pair<Tree, Tree> rotate(const Tree& t, NodeRef v) {
  Rotation r = rotate(OrderedTree(t), v);
  return {r.first.tree(), r.second.tree()};
}

std::optional<NodeRef> find_unbalanced(const Tree& t) {
  std::optional<NodeRef> best;
  int best_depth = -1;
  for (int j = 1; j <= t.node_count(); ++j) {
    const int depth = t.node(NodeRef{j}).depth;
    if (depth > best_depth && !is_balanced_node(t, NodeRef{j})) {
      best = NodeRef{j};
      best_depth = depth;
    }
  }
  return best;
}

std::optional<CyclicTriple> match_cyclic_triple(const OrderedTree& t1, const OrderedTree& t2,
                                                const OrderedTree& t3) {
  const auto c1 = t1.columns();
  const auto c2 = t2.columns();
  const auto c3 = t3.columns();
  if (c1.size() != c2.size() || c1.size() != c3.size() ||
      t1.tree().leaf_count() != t2.tree().leaf_count() ||
      t1.tree().leaf_count() != t3.tree().leaf_count()) {
    throw DomainError("cyclic triple members must share the genus");
  }
  int s = 0;
  for (std::size_t p = 0; p < c1.size(); ++p) {
    if (c1[p] == c2[p] && c1[p] == c3[p]) continue;
    if (s != 0) return std::nullopt;
    s = static_cast<int>(p) + 1;
  }
  if (s == 0) return std::nullopt;
  const auto idx = static_cast<std::size_t>(s - 1);
  const LeafSet s1 = c1[idx];
  const LeafSet s2 = c2[idx];
  const LeafSet s3 = c3[idx];
  if (s1 == s2 || s2 == s3 || s1 == s3) return std::nullopt;
  const LeafSet whole = s1 | s2 | s3;
  const int t = t1.position_of(whole);
  if (t == 0 || t == s) return std::nullopt;
  const LeafSet b1 = whole - s1;
  const LeafSet b2 = whole - s2;
  const LeafSet b3 = whole - s3;
  if (b1.empty() || b2.empty() || b3.empty()) return std::nullopt;
  if (b1.intersects(b2) || b2.intersects(b3) || b1.intersects(b3)) return std::nullopt;
  if (s1 != (b2 | b3) || s2 != (b3 | b1) || s3 != (b1 | b2)) return std::nullopt;
  return CyclicTriple{{t1, t2, t3}, b1, b2, b3, s, t};
}

std::optional<CyclicTriple> is_cyclic_triple(const Tree& t1, const Tree& t2, const Tree& t3) {
  if (t1.genus() != t2.genus() || t1.genus() != t3.genus()) {
    throw DomainError("cyclic triple members must share the genus");
  }
  const std::vector<LeafSet> f1 = t1.sets();
  auto only_in_first = [](const Tree& a, const Tree& b, const Tree& c) {
    std::vector<LeafSet> out;
    for (const InternalNode& n : a.nodes()) {
      if (!b.find(n.leaves) || !c.find(n.leaves)) out.push_back(n.leaves);
    }
    return out;
  };
  const auto d1 = only_in_first(t1, t2, t3);
  const auto d2 = only_in_first(t2, t3, t1);
  const auto d3 = only_in_first(t3, t1, t2);
  if (d1.size() != 1 || d2.size() != 1 || d3.size() != 1) return std::nullopt;
  const int s = OrderedTree(t1).position_of(d1.front());
  std::vector<LeafSet> f2 = f1;
  std::vector<LeafSet> f3 = f1;
  f2[static_cast<std::size_t>(s - 1)] = d2.front();
  f3[static_cast<std::size_t>(s - 1)] = d3.front();
  const int n = t1.leaf_count();
  return match_cyclic_triple(OrderedTree(t1), OrderedTree::from_columns(n, std::move(f2)),
                             OrderedTree::from_columns(n, std::move(f3)));
}

bool verify_cyclic_determinant_identity(const CyclicTriple& triple) {
  const int g = triple.trees[0].tree().genus();
  for (const KSequence& k : k_sequences(g)) {
    std::int64_t sum = 0;
    for (const OrderedTree& t : triple.trees) sum += det(incidence_matrix(k, t.columns()));
    if (sum != 0) return false;
  }
  return true;
}

CycleDecomposition to_k_coordinates(const SignedTreeSum& sum) {
  CycleDecomposition out;
  out.genus = sum.genus;
  for (const auto& [tree, coeff] : sum.terms) {
    const std::int64_t c = coeff * construction_parity(tree);
    auto [it, inserted] = out.coefficients.try_emplace(balanced_tree_to_k(tree), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coefficients.erase(it);
    }
  }
  return out;
}

namespace {

void accumulate(std::map<Tree, std::int64_t>& into, const std::map<Tree, std::int64_t>& from,
                std::int64_t factor) {
  for (const auto& [tree, coeff] : from) {
    auto [it, inserted] = into.try_emplace(tree, factor * coeff);
    if (!inserted) {
      it->second += factor * coeff;
      if (it->second == 0) into.erase(it);
    }
  }
}

std::int64_t power_of_three(int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= 3;
  return out;
}

}  // namespace

const Reducer::Terms& Reducer::reduce_canonical(const Tree& t) {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  Terms result;
  if (const std::optional<NodeRef> v = find_unbalanced(t)) {
    if (++rotations_ > rotation_limit_) {
      throw std::runtime_error("reduction of " + render_tree(t) + " exceeded " +
                               std::to_string(rotation_limit_) + " rotations");
    }
    const Rotation r = rotate(OrderedTree(t), *v);
    if (record_trace_) {
      trace_.push_back(RotationStep{v->index, {render_tree(t), render_tree(r.first.tree()),
                                               render_tree(r.second.tree())}});
    }
    // Inherited orderings differ from the canonical ones by their parity.
    accumulate(result, reduce_canonical(r.first.tree()), -r.first.parity());
    accumulate(result, reduce_canonical(r.second.tree()), -r.second.parity());
  } else {
    result.emplace(t, 1);
  }
  return memo_.emplace(t, std::move(result)).first->second;
}

SignedTreeSum Reducer::reduce(const Tree& t) {
  rotations_ = 0;
  rotation_limit_ = power_of_three(t.genus());
  SignedTreeSum out;
  out.genus = t.genus();
  out.terms = reduce_canonical(t);
  return out;
}

SignedTreeSum reduce_to_balanced(const Tree& t, std::vector<RotationStep>* trace) {
  Reducer reducer(trace != nullptr);
  SignedTreeSum out = reducer.reduce(t);
  if (trace != nullptr) *trace = reducer.trace();
  return out;
}

}  // namespace treecycles
