#include <catwalk/trees.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace catwalk;

namespace {

using Ar = std::vector<std::uint8_t>;

const BinaryTree L = BinaryTree::leaf();
BinaryTree N(const BinaryTree &l, const BinaryTree &r) { return BinaryTree::node(l, r); }

UBTree chain(std::size_t n) {
  Ar a(n, 1);
  a.back() = 0;
  return UBTree::from_bfs_arities(a);
}

const UBTree cherry = UBTree::from_bfs_arities({2, 0, 0});

TEST(LeafStats, Examples) {
  EXPECT_EQ(leaf_stats(N(L, L)), (LeafStats{2, 0, 0}));
  EXPECT_EQ(leaf_stats(N(L, N(L, L))), (LeafStats{2, 1, 0}));
  EXPECT_EQ(leaf_stats(N(N(L, L), L)), (LeafStats{2, 0, 1}));
  EXPECT_EQ(leaf_stats(L).total(), 0u);
}

TEST(BinaryTree, Structure) {
  const auto t = N(N(L, L), L);
  EXPECT_EQ(t.leaf_count(), 3u);
  EXPECT_EQ(t.internal_count(), 2u);
  EXPECT_EQ(t.left(), N(L, L));
  EXPECT_EQ(t.right(), L);
  EXPECT_THROW(L.left(), invalid_input);
  EXPECT_THROW(BinaryTree::from_preorder({1, 0}), invalid_input);
  EXPECT_THROW(BinaryTree::from_preorder({0, 0}), invalid_input);
}

TEST(BinaryTree, Text) {
  EXPECT_EQ(to_text(N(L, N(L, L))), "(L (L L))");
  EXPECT_EQ(to_text(L), "L");
  EXPECT_EQ(parse_binary_tree("(L (L L))"), N(L, N(L, L)));
  EXPECT_EQ(parse_binary_tree("((L L) L)"), N(N(L, L), L));
  EXPECT_THROW(parse_binary_tree("(L L"), invalid_input);
  EXPECT_THROW(parse_binary_tree("(L L L)"), invalid_input);
  EXPECT_THROW(parse_binary_tree("(L  L)"), invalid_input);
}

TEST(UBTree, BfsExamples) {
  EXPECT_EQ(bfs_vertices(chain(3)), (Ar{1, 1, 0}));
  EXPECT_EQ(bfs_vertices(cherry), (Ar{2, 0, 0}));
  EXPECT_THROW(UBTree::from_bfs_arities({2, 0}), invalid_input);
  EXPECT_THROW(UBTree::from_bfs_arities({0, 0}), invalid_input);
  EXPECT_THROW(UBTree::from_bfs_arities({3, 0, 0, 0}), invalid_input);
}

TEST(UBTree, UnaryCount) {
  EXPECT_EQ(unary_count(UBTree()), 0u);
  EXPECT_EQ(unary_count(chain(2)), 1u);
  EXPECT_EQ(unary_count(cherry), 0u);
}

TEST(UBTree, ShapesAreMotzkinAndCanonical) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto shapes = enumerate_shapes(n);
    EXPECT_EQ(shapes.size(), oracle::motzkin(n - 1)) << n;
    EXPECT_TRUE(std::adjacent_find(shapes.begin(), shapes.end(), std::greater_equal<>()) == shapes.end());
    for (const auto &s : shapes) {
      const auto &a = s.bfs_arities();
      std::size_t nodes = 0, binary = 0;
      for (auto x : a) {
        nodes += x > 0;
        binary += x == 2;
      }
      EXPECT_EQ(s.node_indices().size(), nodes);
      EXPECT_EQ(n, 1 + unary_count(s) + 2 * binary);
      EXPECT_EQ(UBTree::from_dfs_arities(s.dfs_arities()), s);
    }
  }
  // leaf < unary < binary at the root
  const auto s3 = enumerate_shapes(3);
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_EQ(s3[0], chain(3));
  EXPECT_EQ(s3[1], cherry);
}

TEST(IsValid, Examples) {
  EXPECT_TRUE(is_valid({cherry, Permutation{1, 3, 2}}));
  EXPECT_FALSE(is_valid({cherry, Permutation{2, 1, 3}}));
  for (const auto &p : oracle::all_perms(3)) {
    EXPECT_EQ(is_valid(LabeledTree{chain(3), Permutation(p)}), (p == std::vector<int>{1, 2, 3}));
  }
  EXPECT_THROW(is_valid({cherry, Permutation{1, 2}}), invalid_input);
}

// Right-to-left-minimum characterization against the raw definition on every
// shape and permutation up to 8 vertices.
TEST(IsValid, AgreesWithIncreasingDefinition) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto perms = oracle::all_perms(n);
    for (const auto &s : enumerate_shapes(n)) {
      const auto kids = s.children();
      for (const auto &p : perms) {
        const bool direct = oracle::increasing(kids, p) && !oracle::contains_213(p);
        ASSERT_EQ(is_valid({s, Permutation(p)}), direct) << n;
      }
    }
  }
}

TEST(EnumerateValid, Examples) {
  EXPECT_EQ(enumerate_valid(1).size(), 1u);
  const auto two = enumerate_valid(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], (LabeledTree{chain(2), Permutation{1, 2}}));
  const std::vector<LabeledTree> three{
      {chain(3), Permutation{1, 2, 3}}, {cherry, Permutation{1, 2, 3}}, {cherry, Permutation{1, 3, 2}}};
  EXPECT_EQ(enumerate_valid(3), three);
  EXPECT_THROW(enumerate_valid(15), resource_limit);
}

// Block-product generation against filtering all permutations.
TEST(EnumerateValid, MatchesFilter) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<LabeledTree> expect;
    const auto perms = oracle::all_perms(n);
    for (const auto &s : enumerate_shapes(n)) {
      const auto kids = s.children();
      for (const auto &p : perms)
        if (oracle::increasing(kids, p) && !oracle::contains_213(p)) expect.push_back({s, Permutation(p)});
    }
    EXPECT_EQ(enumerate_valid(n), expect) << n;
  }
}

TEST(EnumerateValid, UnaryDistribution) {
  // n-vertex trees with k binary nodes: (1/n) C(2n,k) C(n-k,k+1)
  for (std::size_t n = 1; n <= 10; ++n) {
    std::map<std::size_t, std::uint64_t> h;
    for (const auto &lt : enumerate_valid(n)) ++h[unary_count(lt.shape)];
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
      const auto expect = oracle::binom(2 * n, k) * oracle::binom(n - k, k + 1) / n;
      EXPECT_EQ(h[n - 1 - 2 * k], expect) << n << " " << k;
    }
  }
}

TEST(TailLeafMin, Examples) {
  EXPECT_TRUE(has_tail_leaf_min({UBTree(), Permutation{1}}));
  EXPECT_FALSE(has_tail_leaf_min({cherry, Permutation{1, 2, 3}}));
  EXPECT_TRUE(has_tail_leaf_min({cherry, Permutation{1, 3, 2}}));
}

TEST(TailLeafMin, CatalanCount) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto all = enumerate_valid(n);
    const auto k = std::count_if(all.begin(), all.end(), has_tail_leaf_min);
    EXPECT_EQ(static_cast<std::uint64_t>(k), oracle::catalan(n - 1)) << n;
  }
}

TEST(LabeledTree, Text) {
  const LabeledTree t{cherry, Permutation{1, 3, 2}};
  EXPECT_EQ(to_text(t), "1(3,2)");
  EXPECT_EQ(parse_labeled_tree("1(3,2)"), t);
  EXPECT_EQ(to_text(LabeledTree{chain(3), Permutation{1, 2, 3}}), "1(2(3))");
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto &lt : enumerate_valid(n)) EXPECT_EQ(parse_labeled_tree(to_text(lt)), lt);
  EXPECT_THROW(parse_labeled_tree("1(2,3,4)"), invalid_input);
  EXPECT_THROW(parse_labeled_tree("1(2"), invalid_input);
  EXPECT_THROW(parse_labeled_tree("1(1)"), invalid_input);
}

}  // namespace
