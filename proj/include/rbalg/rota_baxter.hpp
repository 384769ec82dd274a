#pragma once

#include "rbalg/structures.hpp"

namespace rbalg {

/// R(x)R(y) = R(R(x)y + xR(y) + weight xy).
struct RBOperator {
  LinearMap map;
  Scalar weight;
};

enum class BaxterSide { left, right };

/// right: P(a)P(b) = P(P(a)b); left: Q(a)Q(b) = Q(aQ(b)).
struct OneSidedBaxter {
  LinearMap map;
  BaxterSide side;
};

/// Side checks "R commutes with alpha" and "R commutes with beta" are reported
/// but do not affect `passed`.
CheckReport check_rota_baxter(const BiHomAssociativeAlgebra& a, const RBOperator& r,
                              std::size_t cap = kDefaultViolationCap);

/// x < y = xR(y), x > y = R(x)y, x . y = weight xy, with no hypothesis check.
BiHomTridendriform rb_split_tables(const BiHomAssociativeAlgebra& a, const RBOperator& r);
/// rb_split_tables after checking RB, BiHom-associativity and commutation with alpha, beta.
BiHomTridendriform rb_derive(const BiHomAssociativeAlgebra& a, const RBOperator& r);
/// x * y = xR(y) + R(x)y + weight xy.
BiHomAssociativeAlgebra rb_double_product(const BiHomAssociativeAlgebra& a, const RBOperator& r);
/// R(x * y) = R(x)R(y) for the double product.
CheckReport check_double_product_morphism(const BiHomAssociativeAlgebra& a, const RBOperator& r,
                                          std::size_t cap = kDefaultViolationCap);

/// Weight-0 RB identities for both operations plus commutation with alpha, beta.
CheckReport check_rb_on_dendriform(const BiHomDendriform& d, const RBOperator& r,
                                   std::size_t cap = kDefaultViolationCap);
/// se = R(x) > y, ne = x > R(y), sw = R(x) < y, nw = x < R(y).
BiHomQuadri rb_dendriform_to_quadri(const BiHomDendriform& d, const RBOperator& r);
/// se = RP(x)y, ne = R(x)P(y), sw = P(x)R(y), nw = xRP(y).
BiHomQuadri commuting_pair_quadri(const BiHomAssociativeAlgebra& a, const RBOperator& r, const RBOperator& p);

CheckReport check_one_sided_baxter(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& b,
                                   std::size_t cap = kDefaultViolationCap);
/// a * b = P(a)Q(b).
BiHomAssociativeAlgebra baxter_pair_product(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& p,
                                            const OneSidedBaxter& q);

/// Twists `a` by (atilde, btilde) and re-checks R on the result.
CheckReport rb_persists_under_twist(const BiHomAssociativeAlgebra& a, const RBOperator& r, const LinearMap& atilde,
                                    const LinearMap& btilde);

}  // namespace rbalg
