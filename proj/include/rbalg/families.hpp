#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbalg/rota_baxter.hpp"

namespace rbalg {

/// The two-parameter BiHom-associative algebra on {e1, e2}:
/// e1e1 = e1, e1e2 = b e1 + (1-a) e2, e2e1 = b(1-a)/a e1 + a e2, e2e2 = (b/a) e2,
/// alpha(e1) = beta(e1) = e1, alpha(e2) = e2e1, beta(e2) = e1e2. Needs a != 0.
BiHomAssociativeAlgebra two_parameter_algebra(const Scalar& a, const Scalar& b);
/// Same over Q(a, b, ...); `field` must declare parameters a and b.
BiHomAssociativeAlgebra two_parameter_algebra(const Field& field);

/// Named Rota-Baxter families on the two-parameter algebra.
struct RBFamily {
  std::string id;
  long weight;
  std::vector<std::string> params;
  std::string formula;
};

const std::vector<RBFamily>& rb_families();
/// Throws UnknownFamily.
const RBFamily& find_family(const std::string& id);

/// The family's map with the given parameter values (keys among r, r1, r2).
LinearMap family_map(const std::string& id, const Field& field, const std::map<std::string, Scalar>& values);
/// The family's operator on two_parameter_algebra(field) with symbolic r, r1, r2.
RBOperator family_operator(const std::string& id, const Field& symbolic_field);

/// Parameters of the symbolic field used for family verification.
const std::vector<std::string>& family_parameters();

enum class FamilyMode { symbolic, sampled };

/// symbolic: checks over Q(a, b, r, r1, r2). sampled: evaluates the symbolic
/// data at each sample, then checks over Q; violations are prefixed by the sample.
CheckReport verify_parametric_family(const std::string& id, FamilyMode mode,
                                     const std::vector<std::map<std::string, mpq_class>>& samples = {});

}  // namespace rbalg
