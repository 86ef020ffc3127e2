#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "treecycles/error.hpp"
#include "treecycles/tree.hpp"

namespace treecycles {
namespace {

std::vector<std::vector<int>> label_lists(const Tree& t) {
  std::vector<std::vector<int>> out;
  for (LeafSet s : descendant_sets(t).sets) out.push_back(s.labels());
  return out;
}

TEST(LeafSet, CanonicalOrderIsSizeThenLex) {
  const LeafSet a = LeafSet::single(1) | LeafSet::single(2);
  const LeafSet b = LeafSet::single(3) | LeafSet::single(4);
  const LeafSet c = LeafSet::single(1) | LeafSet::single(4);
  EXPECT_TRUE(canonical_less(LeafSet::interval(1, 4), a));
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(a, c));
  EXPECT_TRUE(canonical_less(c, b));
  EXPECT_FALSE(canonical_less(a, a));
}

TEST(ParseTree, SmallestCase) {
  const Tree t = parse_tree("(1,2)");
  EXPECT_EQ(t.genus(), 3);
  EXPECT_EQ(t.node_count(), 1);
}

TEST(ParseTree, DescendantSets) {
  const Tree t = parse_tree("((1,2),3)");
  EXPECT_EQ(t.genus(), 4);
  EXPECT_EQ(label_lists(t), (std::vector<std::vector<int>>{{1, 2, 3}, {1, 2}}));
}

TEST(ParseTree, IgnoresWhitespaceAndChildOrder) {
  EXPECT_EQ(parse_tree(" ( 3 ,\n( 2, 1 ) ) "), parse_tree("((1,2),3)"));
}

TEST(ParseTree, Errors) {
  EXPECT_THROW(parse_tree("(1,1)"), DomainError);
  EXPECT_THROW(parse_tree("(1,3)"), DomainError);
  EXPECT_THROW(parse_tree("1"), DomainError);
  EXPECT_THROW(parse_tree("(1,2"), DomainError);
  EXPECT_THROW(parse_tree("(1,2))"), DomainError);
  EXPECT_THROW(parse_tree("(1;2)"), DomainError);
  EXPECT_THROW(parse_tree("(0,1)"), DomainError);
  EXPECT_THROW(parse_tree("(1,2,3)"), DomainError);
  EXPECT_THROW(parse_tree(""), DomainError);
  EXPECT_THROW(parse_tree("(1,99)"), DomainError);
}

TEST(ParseTree, ExplicitGenusMustMatch) {
  EXPECT_EQ(parse_tree("((1,2),3)", 4).genus(), 4);
  EXPECT_THROW(parse_tree("((1,2),3)", 5), DomainError);
}

TEST(RenderTree, CanonicalChildOrder) {
  EXPECT_EQ(render_tree(parse_tree("(2,1)")), "(1,2)");
  EXPECT_EQ(render_tree(parse_tree("(3,(2,1))")), "((1,2),3)");
  EXPECT_EQ(render_tree(parse_tree("((2,3),1)")), "(1,(2,3))");
}

TEST(RenderTree, RoundTripExhaustive) {
  for (int g = 3; g <= 6; ++g) {
    for (const Tree& t : enumerate_trees(g)) {
      const std::string text = render_tree(t);
      EXPECT_EQ(parse_tree(text), t) << text;
      EXPECT_EQ(render_tree(parse_tree(text)), text);
    }
  }
}

TEST(EnumerateTrees, SmallGenera) {
  EXPECT_EQ(enumerate_trees(3).size(), 1U);
  const auto g4 = enumerate_trees(4);
  ASSERT_EQ(g4.size(), 3U);
  EXPECT_EQ(g4[0], parse_tree("((1,2),3)"));
  EXPECT_EQ(g4[1], parse_tree("((1,3),2)"));
  EXPECT_EQ(g4[2], parse_tree("((2,3),1)"));
  EXPECT_EQ(enumerate_trees(5).size(), 15U);
  EXPECT_THROW(enumerate_trees(2), DomainError);
}

TEST(EnumerateTrees, MatchesRecursiveSplitOracle) {
  for (int g = 3; g <= 7; ++g) {
    std::vector<std::string> ours;
    for (const Tree& t : enumerate_trees(g)) ours.push_back(render_tree(t));
    EXPECT_EQ(ours, oracle::all_tree_strings(g)) << "g=" << g;
  }
}

TEST(EnumerateTrees, DoubleFactorialCounts) {
  const std::size_t expected[] = {1, 3, 15, 105, 945, 10395};
  for (int g = 3; g <= 8; ++g) EXPECT_EQ(enumerate_trees(g).size(), expected[g - 3]);
}

TEST(IsBalanced, Examples) {
  EXPECT_TRUE(is_balanced(parse_tree("(1,2)")));
  EXPECT_TRUE(is_balanced(parse_tree("((1,3),2)")));
  const Tree unbalanced = parse_tree("((1,2),3)");
  EXPECT_FALSE(is_balanced(unbalanced));
  EXPECT_EQ(balance_report(unbalanced), (std::vector<bool>{false, true}));
}

TEST(IsBalanced, AgreesWithPathDefinition) {
  for (int g = 3; g <= 7; ++g) {
    for (const Tree& t : enumerate_trees(g)) {
      const std::string text = render_tree(t);
      EXPECT_EQ(is_balanced(t), oracle::balanced_by_paths(text)) << text;
    }
  }
}

TEST(EnumerateBalanced, SmallGenera) {
  EXPECT_EQ(enumerate_balanced(3).size(), 1U);
  const auto g4 = enumerate_balanced(4);
  ASSERT_EQ(g4.size(), 2U);
  EXPECT_EQ(g4[0], parse_tree("((1,3),2)"));
  EXPECT_EQ(g4[1], parse_tree("((2,3),1)"));
  EXPECT_EQ(enumerate_balanced(7).size(), 120U);
}

TEST(EnumerateBalanced, EqualsFilteredEnumeration) {
  for (int g = 3; g <= 8; ++g) {
    std::vector<Tree> filtered;
    for (const Tree& t : enumerate_trees(g)) {
      if (is_balanced(t)) filtered.push_back(t);
    }
    EXPECT_EQ(enumerate_balanced(g), filtered) << "g=" << g;
  }
}

TEST(DescendantSets, SizeThenLexOrder) {
  EXPECT_EQ(label_lists(parse_tree("((1,2),(3,4))")),
            (std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 2}, {3, 4}}));
}

TEST(DescendantSets, LaminarAndReconstructible) {
  for (int g = 3; g <= 6; ++g) {
    for (const Tree& t : enumerate_trees(g)) {
      const LaminarFamily family = descendant_sets(t);
      ASSERT_EQ(static_cast<int>(family.sets.size()), g - 2);
      EXPECT_EQ(family.sets.front(), LeafSet::interval(1, g - 1));
      int full = 0;
      for (std::size_t a = 0; a < family.sets.size(); ++a) {
        EXPECT_GE(family.sets[a].size(), 2);
        full += family.sets[a].size() == g - 1 ? 1 : 0;
        for (std::size_t b = 0; b < a; ++b) {
          EXPECT_NE(family.sets[a], family.sets[b]);
          EXPECT_TRUE(family.sets[a].nested_or_disjoint(family.sets[b]));
        }
      }
      EXPECT_EQ(full, 1);
      EXPECT_EQ(descendant_sets(Tree::from_family(family)), family);
    }
  }
}

TEST(FromSets, RejectsNonTrees) {
  const LeafSet all = LeafSet::interval(1, 4);
  const LeafSet s12 = LeafSet::interval(1, 2);
  const LeafSet s23 = LeafSet::interval(2, 3);
  EXPECT_THROW(Tree::from_sets(4, {all, s12, s23}), DomainError);  // crossing
  EXPECT_THROW(Tree::from_sets(4, {all, s12}), DomainError);       // too few
  EXPECT_THROW(Tree::from_sets(4, {all, s12, s12}), DomainError);  // repeated
  EXPECT_THROW(Tree::from_sets(4, {s12, s23, LeafSet::interval(3, 4)}), DomainError);
}

TEST(Tree, StructuralInvariants) {
  for (const Tree& t : enumerate_trees(7)) {
    EXPECT_EQ(t.root().parent, -1);
    for (const InternalNode& n : t.nodes()) {
      EXPECT_EQ(n.children[0].leaves | n.children[1].leaves, n.leaves);
      EXPECT_FALSE(n.children[0].leaves.intersects(n.children[1].leaves));
      EXPECT_LT(n.children[0].leaves.min(), n.children[1].leaves.min());
    }
  }
}

}  // namespace
}  // namespace treecycles
