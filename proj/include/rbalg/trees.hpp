#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rbalg/errors.hpp"

namespace rbalg {

/// Planar binary tree stored as its preorder code: 1 for an internal node,
/// 0 for a leaf. n leaves means n - 1 internal nodes.
class PlanarBinaryTree {
 public:
  static PlanarBinaryTree leaf();
  static PlanarBinaryTree graft(const PlanarBinaryTree& left, const PlanarBinaryTree& right);
  static PlanarBinaryTree from_code(std::vector<std::uint8_t> code);

  const std::vector<std::uint8_t>& code() const { return code_; }
  bool is_leaf() const { return code_.size() == 1; }
  std::size_t leaf_count() const { return (code_.size() + 1) / 2; }
  std::size_t vertex_count() const { return code_.size(); }
  /// Children of the root; throws Indecomposable on a leaf.
  std::pair<PlanarBinaryTree, PlanarBinaryTree> split() const;
  /// Plain serialization, e.g. "((L L) L)".
  std::string to_string() const;

  auto operator<=>(const PlanarBinaryTree&) const = default;

 private:
  PlanarBinaryTree() = default;
  std::vector<std::uint8_t> code_;
};

/// All trees with n leaves, ordered recursively by split point 1..n-1.
std::vector<PlanarBinaryTree> enumerate_trees(std::size_t n);

struct LeafPower {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  auto operator<=>(const LeafPower&) const = default;
};

struct BAugTree {
  PlanarBinaryTree shape;
  std::vector<LeafPower> leaves;

  BAugTree(PlanarBinaryTree shape, std::vector<LeafPower> leaves);
  static BAugTree leaf(LeafPower p = {});
  std::size_t leaf_count() const { return leaves.size(); }
  auto operator<=>(const BAugTree&) const = default;
};

/// vertex_powers lists the R-power of every vertex, leaves included, in preorder.
struct RBAugTree {
  PlanarBinaryTree shape;
  std::vector<LeafPower> leaves;
  std::vector<std::uint32_t> vertex_powers;

  RBAugTree(PlanarBinaryTree shape, std::vector<LeafPower> leaves, std::vector<std::uint32_t> vertex_powers);
  static RBAugTree leaf(LeafPower p = {}, std::uint32_t r = 0);
  std::size_t leaf_count() const { return leaves.size(); }
  /// R-powers of the leaves in left-to-right order.
  std::vector<std::uint32_t> leaf_r_powers() const;
  auto operator<=>(const RBAugTree&) const = default;
};

using AugTree = std::variant<BAugTree, RBAugTree>;

BAugTree graft(const BAugTree& t1, const BAugTree& t2);
/// New root carries R-power 0.
RBAugTree graft(const RBAugTree& t1, const RBAugTree& t2);
/// Throws KindMismatch when the augmentations differ.
AugTree graft(const AugTree& t1, const AugTree& t2);

struct BDecomposition {
  std::size_t p;
  std::size_t q;
  BAugTree left;
  BAugTree right;
};

struct RBDecomposition {
  std::size_t p;
  std::size_t q;
  std::uint32_t s;
  RBAugTree left;
  RBAugTree right;
};

BDecomposition decompose(const BAugTree& t);
RBDecomposition decompose(const RBAugTree& t);

BAugTree tree_alpha(const BAugTree& t);
BAugTree tree_beta(const BAugTree& t);
RBAugTree tree_alpha(const RBAugTree& t);
RBAugTree tree_beta(const RBAugTree& t);
/// Adds 1 to the R-power of the root (the only vertex of a 1-tree).
RBAugTree tree_R(const RBAugTree& t);
AugTree tree_alpha(const AugTree& t);
AugTree tree_beta(const AugTree& t);
/// Throws WrongAugmentation on a B-augmented tree.
AugTree tree_R(const AugTree& t);

/// `((L[1,0;1] L[1,1;0]){0} L[2,1;2]){3}`; B-augmented trees omit `;f` and `{f}`.
std::string to_string(const BAugTree& t);
std::string to_string(const RBAugTree& t);
std::string to_string(const AugTree& t);
/// Accepts either augmentation; bare `L` leaves and `(..)` nodes read as zero powers.
AugTree parse_aug_tree(std::string_view text);

}  // namespace rbalg
