#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "rbalg/trees.hpp"

using namespace rbalg;
using namespace rbalg::testing;

namespace {

BAugTree b_tree(const std::string& s) { return std::get<BAugTree>(parse_aug_tree(s)); }
RBAugTree rb_tree(const std::string& s) { return std::get<RBAugTree>(parse_aug_tree(s)); }

// All RB trees with n leaves and every power in 0..max.
std::vector<RBAugTree> all_rb_trees(std::size_t n, std::uint32_t max) {
  std::vector<RBAugTree> out;
  for (const auto& shape : enumerate_trees(n)) {
    const std::size_t slots = 2 * n + shape.vertex_count();
    std::vector<std::uint32_t> digits(slots, 0);
    for (;;) {
      std::vector<LeafPower> leaves(n);
      for (std::size_t i = 0; i < n; ++i) leaves[i] = {digits[2 * i], digits[2 * i + 1]};
      std::vector<std::uint32_t> v(digits.begin() + 2 * n, digits.end());
      out.emplace_back(shape, leaves, v);
      std::size_t k = 0;
      while (k < slots && digits[k] == max) digits[k++] = 0;
      if (k == slots) break;
      ++digits[k];
    }
  }
  return out;
}

}  // namespace

TEST(Trees, CatalanCounts) {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), catalan[n - 1]) << n;
  EXPECT_THROW(enumerate_trees(0), InvalidArity);
}

TEST(Trees, EnumerationOrderAndDistinctness) {
  auto t3 = enumerate_trees(3);
  ASSERT_EQ(t3.size(), 2u);
  EXPECT_EQ(t3[0].to_string(), "(L (L L))");
  EXPECT_EQ(t3[1].to_string(), "((L L) L)");
  auto t6 = enumerate_trees(6);
  std::set<PlanarBinaryTree> distinct(t6.begin(), t6.end());
  EXPECT_EQ(distinct.size(), t6.size());
  for (const auto& t : t6) EXPECT_EQ(t.leaf_count(), 6u);
}

TEST(Trees, GraftBasics) {
  auto two = PlanarBinaryTree::graft(PlanarBinaryTree::leaf(), PlanarBinaryTree::leaf());
  EXPECT_EQ(two, enumerate_trees(2)[0]);
  auto L = PlanarBinaryTree::leaf();
  EXPECT_NE(PlanarBinaryTree::graft(two, L), PlanarBinaryTree::graft(L, two));
}

TEST(Trees, GraftFigureExample) {
  BAugTree t1 = b_tree("((L[1,0] L[1,1]) L[2,1])");
  BAugTree t2 = b_tree("(L[0,0] (L[1,0] L[2,3]))");
  BAugTree g = graft(t1, t2);
  const std::vector<LeafPower> expect{{1, 0}, {1, 1}, {2, 1}, {0, 0}, {1, 0}, {2, 3}};
  EXPECT_EQ(g.leaves, expect);
  EXPECT_EQ(g.shape, PlanarBinaryTree::graft(t1.shape, t2.shape));
}

TEST(Trees, GraftRBRootIsZero) {
  RBAugTree t = graft(RBAugTree::leaf({1, 0}, 2), RBAugTree::leaf({0, 1}, 3));
  EXPECT_EQ(t.vertex_powers.front(), 0u);
  EXPECT_EQ(to_string(t), "(L[1,0;2] L[0,1;3]){0}");
  EXPECT_THROW(graft(AugTree(RBAugTree::leaf()), AugTree(BAugTree::leaf())), KindMismatch);
}

TEST(Trees, DecomposeExamples) {
  auto two = b_tree("(L L)");
  BDecomposition d = decompose(two);
  EXPECT_EQ(d.p, 1u);
  EXPECT_EQ(d.q, 1u);
  EXPECT_EQ(d.left, BAugTree::leaf());
  EXPECT_THROW(decompose(BAugTree::leaf()), Indecomposable);

  // R^3 applied to the graft of a 3-tree and a 2-tree.
  RBAugTree t = rb_tree("((L[1,2;1] (L[0,2;0] L[3,0;2]){1}){0} (L[0,1;0] L[1,0;1]){2}){3}");
  RBDecomposition r = decompose(t);
  EXPECT_EQ(r.s, 3u);
  EXPECT_EQ(r.p, 3u);
  EXPECT_EQ(r.q, 2u);
  EXPECT_EQ(to_string(r.left), "(L[1,2;1] (L[0,2;0] L[3,0;2]){1}){0}");
  EXPECT_EQ(to_string(r.right), "(L[0,1;0] L[1,0;1]){2}");
  RBAugTree back = graft(r.left, r.right);
  for (std::uint32_t i = 0; i < r.s; ++i) back = tree_R(back);
  EXPECT_EQ(back, t);
}

TEST(Trees, TreeMaps) {
  BAugTree t = b_tree("((L[0,2] L[3,1]) L[1,0])");
  const std::vector<LeafPower> alpha{{1, 2}, {4, 1}, {2, 0}};
  EXPECT_EQ(tree_alpha(t).leaves, alpha);
  EXPECT_EQ(tree_beta(t).leaves[0], (LeafPower{0, 3}));
  EXPECT_EQ(to_string(tree_R(RBAugTree::leaf({0, 0}, 4))), "L[0,0;5]");
  EXPECT_THROW(tree_R(AugTree(t)), WrongAugmentation);
  RBAugTree r = rb_tree("(L[0,0;1] L[0,0;0]){2}");
  EXPECT_EQ(tree_R(r).vertex_powers, (std::vector<std::uint32_t>{3, 1, 0}));
}

TEST(Trees, RoundTripsExhaustiveSmall) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& t : all_rb_trees(n, n <= 3 ? 2 : 1)) {
      RBDecomposition d = decompose(t);
      RBAugTree back = graft(d.left, d.right);
      for (std::uint32_t i = 0; i < d.s; ++i) back = tree_R(back);
      ASSERT_EQ(back, t);
      ASSERT_EQ(d.p + d.q, n);
      RBDecomposition again = decompose(graft(d.left, d.right));
      ASSERT_EQ(again.left, d.left);
      ASSERT_EQ(again.right, d.right);
      ASSERT_EQ(again.s, 0u);
    }
  }
}

TEST(Trees, RoundTripsRandom) {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    RBAugTree t1 = random_rb_tree(1 + rng() % 6, 3, 3, rng), t2 = random_rb_tree(1 + rng() % 6, 3, 3, rng);
    RBDecomposition d = decompose(graft(t1, t2));
    EXPECT_EQ(d.left, t1);
    EXPECT_EQ(d.right, t2);
    EXPECT_EQ(d.s, 0u);
    BAugTree b1 = random_b_tree(1 + rng() % 6, 3, rng), b2 = random_b_tree(1 + rng() % 6, 3, rng);
    BDecomposition bd = decompose(graft(b1, b2));
    EXPECT_EQ(bd.left, b1);
    EXPECT_EQ(bd.right, b2);
  }
}

TEST(Trees, MapsCommuteAndAlphaBetaAreMultiplicative) {
  Rng rng(52);
  for (int i = 0; i < 500; ++i) {
    RBAugTree t = random_rb_tree(1 + rng() % 7, 2, 2, rng);
    EXPECT_EQ(tree_alpha(tree_beta(t)), tree_beta(tree_alpha(t)));
    EXPECT_EQ(tree_R(tree_alpha(t)), tree_alpha(tree_R(t)));
    EXPECT_EQ(tree_R(tree_beta(t)), tree_beta(tree_R(t)));
    RBAugTree u = random_rb_tree(1 + rng() % 4, 2, 2, rng);
    EXPECT_EQ(tree_alpha(graft(t, u)), graft(tree_alpha(t), tree_alpha(u)));
    EXPECT_EQ(tree_beta(graft(t, u)), graft(tree_beta(t), tree_beta(u)));
    EXPECT_NE(tree_R(graft(t, u)), graft(tree_R(t), tree_R(u)));
  }
}

TEST(Trees, SerializationRoundTrip) {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    RBAugTree t = random_rb_tree(1 + rng() % 7, 4, 4, rng);
    EXPECT_EQ(rb_tree(to_string(t)), t);
    BAugTree b = random_b_tree(1 + rng() % 7, 4, rng);
    EXPECT_EQ(b_tree(to_string(b)), b);
  }
  EXPECT_THROW(parse_aug_tree("(L[1,0] L"), ParseError);
  EXPECT_THROW(parse_aug_tree("L[1]"), ParseError);
  EXPECT_THROW(parse_aug_tree("(L L) L"), ParseError);
}
