#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rbalg/rota_baxter.hpp"
#include "rbalg/trees.hpp"

namespace rbalg {

/// Basis element (x_{w1} (x) ... (x) x_{wn}) decorated by an RB-augmented n-tree.
/// Letters index a fixed finite basis of the generating module.
struct FreeTerm {
  RBAugTree tree;
  std::vector<std::uint32_t> word;

  FreeTerm(RBAugTree tree, std::vector<std::uint32_t> word);
  auto operator<=>(const FreeTerm&) const = default;
  std::string to_string() const;
};

class FreeElement {
 public:
  using Terms = std::map<FreeTerm, Scalar>;

  FreeElement(Field field, std::size_t basis_size);
  static FreeElement term(const Field& field, std::size_t basis_size, const FreeTerm& t);
  /// The letter `index` on the one-leaf tree with all powers zero.
  static FreeElement generator(const Field& field, std::size_t basis_size, std::uint32_t index);

  const Field& field() const { return field_; }
  std::size_t basis_size() const { return basis_size_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeTerm& t, const Scalar& c);
  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement scaled(const Scalar& c) const;
  bool equals(const FreeElement& o) const;
  bool operator==(const FreeElement& o) const { return equals(o); }
  std::string to_string() const;

 private:
  void require_compatible(const FreeElement& o) const;
  Field field_;
  std::size_t basis_size_;
  Terms terms_;
};

FreeElement free_multiply(const FreeElement& x, const FreeElement& y);
FreeElement free_alpha(const FreeElement& x);
FreeElement free_beta(const FreeElement& x);
FreeElement free_R(const FreeElement& x);

/// Evaluates a decorated tree on an algebra: leaf i becomes
/// alpha^a beta^b R^f(x_i); R^f(v) is applied at every internal vertex v.
Vector action_eval(const BAugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a);
Vector action_eval(const RBAugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a,
                   const RBOperator& r);
/// `r` must be given exactly when `t` is RB-augmented.
Vector action_eval(const AugTree& t, const std::vector<Vector>& xs, const BiHomAssociativeAlgebra& a,
                   const RBOperator* r);
/// Linear extension of action_eval; letter k of each word is replaced by letters[k].
Vector free_eval(const FreeElement& x, const std::vector<Vector>& letters, const BiHomAssociativeAlgebra& a,
                 const RBOperator& r);

struct IdealBounds {
  std::size_t max_leaves;
  std::uint32_t max_ab_power;
  std::uint32_t max_r_power;
};

bool fits_bounds(const FreeTerm& t, const IdealBounds& b);

/// Span of all elements of the BiHom-associativity ideal that are reachable
/// inside the truncation window: generators (uv)b(w) - a(u)(vw), closed under
/// alpha, beta and grafting with window basis terms until nothing new fits.
/// Membership found here is sound; absence is not a proof of non-membership.
class TruncatedIdeal {
 public:
  TruncatedIdeal(Field field, std::size_t basis_size, IdealBounds bounds);
  /// Canonical representative of x modulo the truncated span.
  FreeElement reduce(const FreeElement& x) const;
  std::size_t dimension() const { return pivots_.size(); }
  const IdealBounds& bounds() const { return bounds_; }

 private:
  bool insert(FreeElement g, FreeElement* reduced);
  FreeElement reduce_unchecked(FreeElement x) const;
  Field field_;
  std::size_t basis_size_;
  IdealBounds bounds_;
  std::map<FreeTerm, FreeElement> pivots_;
};

/// Builds the truncated ideal for x's basis and reduces x; throws BoundsExceeded
/// when a term of x lies outside the window.
FreeElement truncated_ideal_reduce(const FreeElement& x, const IdealBounds& bounds);

/// All basis terms with exactly n leaves inside the window.
std::vector<FreeTerm> window_terms(std::size_t basis_size, std::size_t n, const IdealBounds& bounds);

}  // namespace rbalg
