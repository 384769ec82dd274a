#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbalg/check_report.hpp"
#include "rbalg/linalg.hpp"

namespace rbalg {

// Records carry no validation; run the matching checker explicitly.

struct BiHomAssociativeAlgebra {
  StructureTable mu;
  LinearMap alpha;
  LinearMap beta;
  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }
};

struct BiHomDendriform {
  StructureTable prec;
  StructureTable succ;
  LinearMap alpha;
  LinearMap beta;
  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }
};

struct BiHomTridendriform {
  StructureTable prec;
  StructureTable succ;
  StructureTable dot;
  LinearMap alpha;
  LinearMap beta;
  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }
};

struct BiHomQuadri {
  StructureTable nw;
  StructureTable sw;
  StructureTable ne;
  StructureTable se;
  LinearMap alpha;
  LinearMap beta;
  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }

  StructureTable succ() const { return ne + se; }
  StructureTable prec() const { return nw + sw; }
  StructureTable vee() const { return se + sw; }
  StructureTable wedge() const { return ne + nw; }
  StructureTable star() const { return nw + sw + ne + se; }
};

/// Classical structures: both structure maps are the identity.
BiHomAssociativeAlgebra classical_algebra(const StructureTable& mu);
BiHomDendriform classical_dendriform(const StructureTable& prec, const StructureTable& succ);

CheckReport check_bihom_associative(const BiHomAssociativeAlgebra& a, std::size_t cap = kDefaultViolationCap);
CheckReport check_dendriform(const BiHomDendriform& d, std::size_t cap = kDefaultViolationCap);
CheckReport check_tridendriform(const BiHomTridendriform& t, std::size_t cap = kDefaultViolationCap);
CheckReport check_quadri(const BiHomQuadri& q, std::size_t cap = kDefaultViolationCap);

/// Replaces every operation by (x, y) -> op(atilde x, btilde y) and the
/// structure maps by atilde∘alpha, btilde∘beta. Throws
/// TwistHypothesisViolated unless atilde, btilde are multiplicative for
/// every operation and commute pairwise and with alpha, beta.
BiHomAssociativeAlgebra yau_twist(const BiHomAssociativeAlgebra& s, const LinearMap& atilde, const LinearMap& btilde);
BiHomDendriform yau_twist(const BiHomDendriform& s, const LinearMap& atilde, const LinearMap& btilde);
BiHomTridendriform yau_twist(const BiHomTridendriform& s, const LinearMap& atilde, const LinearMap& btilde);
BiHomQuadri yau_twist(const BiHomQuadri& s, const LinearMap& atilde, const LinearMap& btilde);

BiHomDendriform tridend_to_dend(const BiHomTridendriform& t);
BiHomAssociativeAlgebra total_product(const BiHomDendriform& d);
BiHomAssociativeAlgebra total_product(const BiHomTridendriform& t);
BiHomAssociativeAlgebra total_product(const BiHomQuadri& q);
BiHomTridendriform embed_dend_in_tridend(const BiHomDendriform& d);
/// (horizontal, vertical) = ((prec, succ), (wedge, vee)).
std::pair<BiHomDendriform, BiHomDendriform> quadri_projections(const BiHomQuadri& q);
/// Quadri on A (x) B with nw = prec (x) prec', sw = prec (x) succ',
/// ne = succ (x) prec', se = succ (x) succ'.
BiHomQuadri tensor_quadri(const BiHomDendriform& a, const BiHomDendriform& b);

/// Throws InputAxiomsFail with the report's first violation when `report` failed.
void require_passed(const CheckReport& report, const std::string& what);

}  // namespace rbalg
