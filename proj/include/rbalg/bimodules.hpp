#pragma once

#include "rbalg/rota_baxter.hpp"

namespace rbalg {

/// Bimodule M over an algebra A of dimension n; M has dimension m.
/// left_action: A (x) M -> M (n x m -> m), right_action: M (x) A -> M (m x n -> m).
struct BiHomBimodule {
  StructureTable left_action;
  StructureTable right_action;
  LinearMap alpha;
  LinearMap beta;
  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }
};

/// pi: M -> A, an n x m matrix.
struct GRBOperator {
  LinearMap map;
};

/// A over itself, both actions given by mu.
BiHomBimodule regular_bimodule(const BiHomAssociativeAlgebra& a);

/// Commutation, the four compatibilities, and
/// "(aa')b(m) = a(a)(a'm)", "(ma)b(a') = a(m)(aa')", "(am)b(a') = a(a)(ma')".
CheckReport check_bimodule(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m,
                           std::size_t cap = kDefaultViolationCap);

/// A (+) M with (a, m)(a', m') = (aa', ma' + am'); basis of A first. No check.
BiHomAssociativeAlgebra split_null_raw(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m);
/// split_null_raw after check_bimodule.
BiHomAssociativeAlgebra split_null_extension(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m);

/// Bimodule over yau_twist(a, alpha_a, beta_a) with actions a > m = alpha_a(a) beta_m(m)
/// and m < a = alpha_m(m) beta_a(a). `a` and `m` must carry identity structure maps.
BiHomBimodule yau_twist_bimodule(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const LinearMap& alpha_a,
                                 const LinearMap& beta_a, const LinearMap& alpha_m, const LinearMap& beta_m);

/// "pi(m)pi(n) = pi(pi(m)n + m pi(n))" on basis pairs of M; side checks
/// "alpha_A∘pi = pi∘alpha_M" and "beta_A∘pi = pi∘beta_M".
CheckReport check_grb(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi,
                      std::size_t cap = kDefaultViolationCap);

/// (a, m) -> (pi(m), 0) on split_null_extension(a, m), weight 0.
RBOperator grb_hat(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi);

/// m > n = pi(m) n, m < n = m pi(n) on M.
BiHomDendriform grb_to_dendriform(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi);

/// A as a bimodule over base = (M, *_pi, alpha_M, beta_M) with
/// m . a = pi(m)a - pi(m a) and a . m = a pi(m) - pi(a m); extension = M ⋉ A.
struct TransposedBimodule {
  BiHomAssociativeAlgebra base;
  BiHomBimodule module;
  BiHomAssociativeAlgebra extension;
};

TransposedBimodule grb_transpose_actions(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m,
                                         const GRBOperator& pi);

}  // namespace rbalg
