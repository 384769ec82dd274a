#pragma once

#include "rbalg/rota_baxter.hpp"

namespace rbalg {

/// mu o T is BiHom-associative with maps (atilde∘alpha, btilde∘beta) when
/// T∘((atilde∘alpha) (x) (mu∘T)) = (alpha (x) mu)∘companion and
/// T∘((mu∘T) (x) (btilde∘beta)) = (mu (x) beta)∘companion.
struct WeakPseudotwistor {
  TensorSquareMap T;
  TensorCubeMap companion;
  LinearMap atilde;
  LinearMap btilde;
};

struct PseudotwistorWithCompanions {
  TensorSquareMap T;
  TensorCubeMap T1;
  TensorCubeMap T2;
  LinearMap atilde;
  LinearMap btilde;
};

/// Identity T and companion with identity atilde, btilde.
WeakPseudotwistor identity_pseudotwistor(const Field& field, std::size_t n);

/// The two companion equations, "T commutes with f (x) f" for f in
/// alpha, beta, atilde, btilde, plus multiplicativity and pairwise commutation
/// of atilde, btilde, alpha, beta.
CheckReport check_weak_pseudotwistor(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& w,
                                     std::size_t cap = kDefaultViolationCap);
/// The three companion equations plus the same commutations.
CheckReport check_pseudotwistor(const BiHomAssociativeAlgebra& a, const PseudotwistorWithCompanions& p,
                                std::size_t cap = kDefaultViolationCap);
/// T1∘(T (x) id)∘(atilde (x) T).
WeakPseudotwistor induced_weak_pseudotwistor(const PseudotwistorWithCompanions& p);

/// (A, mu∘T, atilde∘alpha, btilde∘beta).
BiHomAssociativeAlgebra twisted_algebra(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& w);

/// T = R (x) id + id (x) R + w id with its seven-term companion.
WeakPseudotwistor rb_pseudotwistor(const BiHomAssociativeAlgebra& a, const RBOperator& r);

enum class ComposeMode { general, commuting };

/// (T∘D, companion_T∘companion_D, id, id); throws HypothesisViolated naming the failed equation.
WeakPseudotwistor compose_pseudotwistors(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& t,
                                         const WeakPseudotwistor& d, ComposeMode mode);

/// T = P (x) Q, companion P (x) PQ (x) Q.
WeakPseudotwistor baxter_pair_pseudotwistor(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& p,
                                            const OneSidedBaxter& q);

}  // namespace rbalg
