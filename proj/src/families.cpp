#include "rbalg/families.hpp"

namespace rbalg {

BiHomAssociativeAlgebra two_parameter_algebra(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw FieldMismatch("parameters over different fields");
  const Field& f = a.field();
  if (a.is_zero()) throw ZeroDivision("the two-parameter algebra needs a != 0");
  const Scalar one = f.one();
  const Scalar zero = f.zero();
  const Scalar ba = b / a;
  Vector e1e2(f, {b, one - a});
  Vector e2e1(f, {ba * (one - a), a});
  StructureTable mu(f, 2);
  mu.set_product(0, 0, Vector(f, {one, zero}));
  mu.set_product(0, 1, e1e2);
  mu.set_product(1, 0, e2e1);
  mu.set_product(1, 1, Vector(f, {zero, ba}));
  Vector e1(f, {one, zero});
  return {mu, Matrix::from_columns(f, 2, {e1, e2e1}), Matrix::from_columns(f, 2, {e1, e1e2})};
}

BiHomAssociativeAlgebra two_parameter_algebra(const Field& field) {
  return two_parameter_algebra(field.parameter("a"), field.parameter("b"));
}

const std::vector<RBFamily>& rb_families() {
  static const std::vector<RBFamily> families{
      {"w0f1", 0, {"r"}, "R(e1) = 0, R(e2) = r e1"},
      {"w0f2", 0, {"r1", "r2"}, "R(e1) = r1 e1 + r2 e2, R(e2) = -r1^2/r2 e1 - r1 e2"},
      {"w1f1", 1, {"r"}, "R(e1) = -e1, R(e2) = r e1"},
      {"w1f2", 1, {"r"}, "R(e1) = 0, R(e2) = r e1 - e2"},
      {"w1f3", 1, {}, "R(e1) = -e1, R(e2) = -e2"},
      {"w1f4", 1, {"r1", "r2"}, "R(e1) = r1 e1 + r2 e2, R(e2) = -r1(r1+1)/r2 e1 - (r1+1) e2"},
  };
  return families;
}

const RBFamily& find_family(const std::string& id) {
  for (const auto& f : rb_families()) {
    if (f.id == id) return f;
  }
  throw UnknownFamily("unknown Rota-Baxter family '" + id + "'");
}

const std::vector<std::string>& family_parameters() {
  static const std::vector<std::string> params{"a", "b", "r", "r1", "r2"};
  return params;
}

LinearMap family_map(const std::string& id, const Field& f, const std::map<std::string, Scalar>& values) {
  const RBFamily& fam = find_family(id);
  auto get = [&](const std::string& name) -> Scalar {
    auto it = values.find(name);
    if (it == values.end()) throw IncompleteAssignment("family " + id + " needs a value for " + name);
    if (it->second.field() != f) throw FieldMismatch("parameter " + name + " over another field");
    return it->second;
  };
  const Scalar zero = f.zero();
  const Scalar one = f.one();
  auto cols = [&](Vector c1, Vector c2) { return Matrix::from_columns(f, 2, {std::move(c1), std::move(c2)}); };
  if (fam.id == "w0f1") return cols(Vector(f, {zero, zero}), Vector(f, {get("r"), zero}));
  if (fam.id == "w0f2") {
    Scalar r1 = get("r1"), r2 = get("r2");
    return cols(Vector(f, {r1, r2}), Vector(f, {-(r1 * r1) / r2, -r1}));
  }
  if (fam.id == "w1f1") return cols(Vector(f, {-one, zero}), Vector(f, {get("r"), zero}));
  if (fam.id == "w1f2") return cols(Vector(f, {zero, zero}), Vector(f, {get("r"), -one}));
  if (fam.id == "w1f3") return Matrix::identity(f, 2).scaled(-one);
  Scalar r1 = get("r1"), r2 = get("r2");
  return cols(Vector(f, {r1, r2}), Vector(f, {-(r1 * (r1 + one)) / r2, -(r1 + one)}));
}

RBOperator family_operator(const std::string& id, const Field& symbolic_field) {
  const RBFamily& fam = find_family(id);
  std::map<std::string, Scalar> values;
  for (const auto& p : fam.params) values.emplace(p, symbolic_field.parameter(p));
  return {family_map(id, symbolic_field, values), symbolic_field.from_int(fam.weight)};
}

CheckReport verify_parametric_family(const std::string& id, FamilyMode mode,
                                     const std::vector<std::map<std::string, mpq_class>>& samples) {
  Field sym = Field::rational_function(family_parameters());
  RBOperator r = family_operator(id, sym);
  BiHomAssociativeAlgebra a = two_parameter_algebra(sym);
  if (mode == FamilyMode::symbolic) return check_rota_baxter(a, r);
  CheckReport total;
  Field q = Field::rational();
  for (const auto& sample : samples) {
    auto at = [&](const Scalar& s) { return evaluate(s, sample); };
    if (evaluate(sym.parameter("a"), sample).is_zero()) throw EvalSingular("the algebra needs a != 0");
    BiHomAssociativeAlgebra aq{map_scalars(a.mu, q, at), map_scalars(a.alpha, q, at), map_scalars(a.beta, q, at)};
    RBOperator rq{map_scalars(r.map, q, at), at(r.weight)};
    std::string label;
    for (const auto& [k, v] : sample) label += (label.empty() ? "" : ",") + k + "=" + v.get_str();
    total.merge(check_rota_baxter(aq, rq), label + ": ");
  }
  return total;
}

}  // namespace rbalg
