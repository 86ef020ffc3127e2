#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "treecycles/arnold.hpp"
#include "treecycles/determinant.hpp"
#include "treecycles/k_sequence.hpp"
#include "treecycles/tree.hpp"

namespace treecycles {

// Coordinates of a tree's abelian cycle (internal nodes taken in canonical
// order) in the basis B_k, where B_k is the cycle of the balanced tree T_k
// with its nodes in construction order. Zero coefficients are not stored.
struct CycleDecomposition {
  int genus = 3;
  std::map<KSequence, std::int64_t> coefficients;

  std::int64_t coefficient(const KSequence& k) const;
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// The balanced tree T_k: for i = g-2 down to 1, merge the cluster whose
// representative is k_i with the one whose representative is i+1.
Tree build_balanced_tree(const KSequence& k);
// Inverse of build_balanced_tree; throws DomainError on an unbalanced tree.
KSequence balanced_tree_to_k(const Tree& t);

// Construction position (1-based) of each canonical node. The node whose
// children have minima a < b is the one created at merge step b-1, so its
// position is b-1. This is a permutation for every tree; for balanced trees
// it is the order in which build_balanced_tree creates the curves.
std::vector<int> construction_positions(const Tree& t);
// Node leaf sets listed in construction order.
std::vector<LeafSet> construction_columns(const Tree& t);
// Sign of the permutation taking construction order to canonical order.
int construction_parity(const Tree& t);

// X_{k,T}: entry (i,j) is 1 iff k_i and i+1 both lie in column set j.
SquareMatrix incidence_matrix(const KSequence& k, const Tree& t);
SquareMatrix incidence_matrix(const KSequence& k, std::span<const LeafSet> columns);

// (-1)^binom(g-2,2)
int pairing_sign(int g);

// <W_k, A_T> = (-1)^binom(g-2,2) det X_{k,T}.
std::int64_t pair(const KSequence& k, const Tree& t);
// Linear extension of pair to a class of degree g-2 on g-1 strands.
BigInt pair_class(const CohomologyClass& c, const Tree& t);

CycleDecomposition decompose(const Tree& t);

// M[k'][k] = det X_{k', T_k} with canonical ordering, rows and columns in
// k_sequences(g) order.
std::vector<std::vector<std::int64_t>> duality_table(int g);

}  // namespace treecycles
