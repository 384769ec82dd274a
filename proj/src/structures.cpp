#include "rbalg/structures.hpp"

#include "axioms.hpp"

namespace rbalg {

using detail::check_commute;
using detail::check_identity;
using detail::check_multiplicative;

namespace {

struct NamedOp {
  std::string name;
  const StructureTable* op;
};

void require_shape(const std::vector<NamedOp>& ops, const LinearMap& alpha, const LinearMap& beta) {
  const std::size_t n = alpha.rows();
  if (!alpha.is_square() || !beta.is_square() || beta.rows() != n) {
    throw DimensionMismatch("structure maps must be square of equal size");
  }
  if (alpha.field() != beta.field()) throw FieldMismatch("structure maps over different fields");
  for (const auto& [name, op] : ops) {
    if (op->left_dim() != n || op->right_dim() != n || op->out_dim() != n) {
      throw DimensionMismatch("operation " + name + " does not act on dimension " + std::to_string(n));
    }
    if (op->field() != alpha.field()) throw FieldMismatch("operation " + name + " over a different field");
  }
}

void check_structure_maps(CheckReport& r, const std::vector<NamedOp>& ops, const LinearMap& alpha,
                          const LinearMap& beta) {
  check_commute(r, "a(b(x)) = b(a(x))", alpha, beta);
  for (const auto& [name, op] : ops) {
    check_multiplicative(r, "a(x " + name + " y) = a(x) " + name + " a(y)", alpha, *op);
  }
  for (const auto& [name, op] : ops) {
    check_multiplicative(r, "b(x " + name + " y) = b(x) " + name + " b(y)", beta, *op);
  }
}

// Sets `why` when f and g do not commute.
bool commute_or_describe(const LinearMap& f, const LinearMap& g, const std::string& what, std::string& why) {
  if (maps_commute(f, g)) return true;
  why = what + " do not commute";
  return false;
}

void validate_twist(const std::vector<NamedOp>& ops, const LinearMap& alpha, const LinearMap& beta,
                    const LinearMap& at, const LinearMap& bt) {
  const std::size_t n = alpha.rows();
  if (!at.is_square() || !bt.is_square() || at.rows() != n || bt.rows() != n) {
    throw DimensionMismatch("twisting maps must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::string why;
  if (!commute_or_describe(at, bt, "atilde and btilde", why) || !commute_or_describe(at, alpha, "atilde and alpha", why) ||
      !commute_or_describe(at, beta, "atilde and beta", why) || !commute_or_describe(bt, alpha, "btilde and alpha", why) ||
      !commute_or_describe(bt, beta, "btilde and beta", why)) {
    throw TwistHypothesisViolated(why);
  }
  for (const auto& [name, op] : ops) {
    for (const auto& [mname, m] : {std::pair<std::string, const LinearMap*>{"atilde", &at}, {"btilde", &bt}}) {
      CheckReport r(1);
      check_multiplicative(r, "", *m, *op);
      if (!r.passed) {
        const auto& w = r.violations.front().basis;
        throw TwistHypothesisViolated(mname + " is not multiplicative for " + name + " at (" + std::to_string(w[0]) +
                                      "," + std::to_string(w[1]) + ")");
      }
    }
  }
}

}  // namespace

void require_passed(const CheckReport& report, const std::string& what) {
  if (report.passed) return;
  const Violation& v = report.violations.front();
  std::string at;
  for (std::size_t i = 0; i < v.basis.size(); ++i) at += (i ? "," : "") + std::to_string(v.basis[i]);
  throw InputAxiomsFail(what + ": " + v.axiom + " fails at (" + at + ")");
}

BiHomAssociativeAlgebra classical_algebra(const StructureTable& mu) {
  auto id = Matrix::identity(mu.field(), mu.out_dim());
  return {mu, id, id};
}

BiHomDendriform classical_dendriform(const StructureTable& prec, const StructureTable& succ) {
  auto id = Matrix::identity(prec.field(), prec.out_dim());
  return {prec, succ, id, id};
}

CheckReport check_bihom_associative(const BiHomAssociativeAlgebra& a, std::size_t cap) {
  std::vector<NamedOp> ops{{".", &a.mu}};
  require_shape(ops, a.alpha, a.beta);
  CheckReport r(cap);
  check_structure_maps(r, ops, a.alpha, a.beta);
  check_identity(r, "(xy)b(z) = a(x)(yz)", a.mu, a.mu, a.mu, a.mu, a.alpha, a.beta);
  return r;
}

CheckReport check_dendriform(const BiHomDendriform& d, std::size_t cap) {
  std::vector<NamedOp> ops{{"<", &d.prec}, {">", &d.succ}};
  require_shape(ops, d.alpha, d.beta);
  CheckReport r(cap);
  check_structure_maps(r, ops, d.alpha, d.beta);
  StructureTable sum = d.prec + d.succ;
  check_identity(r, "(x < y) < b(z) = a(x) < (y < z + y > z)", d.prec, d.prec, d.prec, sum, d.alpha, d.beta);
  check_identity(r, "(x > y) < b(z) = a(x) > (y < z)", d.succ, d.prec, d.succ, d.prec, d.alpha, d.beta);
  check_identity(r, "(x < y + x > y) > b(z) = a(x) > (y > z)", sum, d.succ, d.succ, d.succ, d.alpha, d.beta);
  return r;
}

CheckReport check_tridendriform(const BiHomTridendriform& t, std::size_t cap) {
  std::vector<NamedOp> ops{{"<", &t.prec}, {">", &t.succ}, {".", &t.dot}};
  require_shape(ops, t.alpha, t.beta);
  CheckReport r(cap);
  check_structure_maps(r, ops, t.alpha, t.beta);
  StructureTable sum = t.prec + t.succ + t.dot;
  const auto &a = t.alpha, &b = t.beta;
  check_identity(r, "(x < y) < b(z) = a(x) < (y < z + y > z + y . z)", t.prec, t.prec, t.prec, sum, a, b);
  check_identity(r, "(x > y) < b(z) = a(x) > (y < z)", t.succ, t.prec, t.succ, t.prec, a, b);
  check_identity(r, "(x < y + x > y + x . y) > b(z) = a(x) > (y > z)", sum, t.succ, t.succ, t.succ, a, b);
  check_identity(r, "(x < y) . b(z) = a(x) . (y > z)", t.prec, t.dot, t.dot, t.succ, a, b);
  check_identity(r, "(x > y) . b(z) = a(x) > (y . z)", t.succ, t.dot, t.succ, t.dot, a, b);
  check_identity(r, "(x . y) < b(z) = a(x) . (y < z)", t.dot, t.prec, t.dot, t.prec, a, b);
  check_identity(r, "(x . y) . b(z) = a(x) . (y . z)", t.dot, t.dot, t.dot, t.dot, a, b);
  return r;
}

CheckReport check_quadri(const BiHomQuadri& q, std::size_t cap) {
  std::vector<NamedOp> ops{{"nw", &q.nw}, {"sw", &q.sw}, {"ne", &q.ne}, {"se", &q.se}};
  require_shape(ops, q.alpha, q.beta);
  CheckReport r(cap);
  check_structure_maps(r, ops, q.alpha, q.beta);
  const StructureTable succ = q.succ(), prec = q.prec(), vee = q.vee(), wedge = q.wedge(), star = q.star();
  const auto &a = q.alpha, &b = q.beta;
  check_identity(r, "(x nw y) nw b(z) = a(x) nw (y * z)", q.nw, q.nw, q.nw, star, a, b);
  check_identity(r, "(x ne y) nw b(z) = a(x) ne (y < z)", q.ne, q.nw, q.ne, prec, a, b);
  check_identity(r, "(x ^ y) ne b(z) = a(x) ne (y > z)", wedge, q.ne, q.ne, succ, a, b);
  check_identity(r, "(x sw y) nw b(z) = a(x) sw (y ^ z)", q.sw, q.nw, q.sw, wedge, a, b);
  check_identity(r, "(x se y) nw b(z) = a(x) se (y nw z)", q.se, q.nw, q.se, q.nw, a, b);
  check_identity(r, "(x v y) ne b(z) = a(x) se (y ne z)", vee, q.ne, q.se, q.ne, a, b);
  check_identity(r, "(x < y) sw b(z) = a(x) sw (y v z)", prec, q.sw, q.sw, vee, a, b);
  check_identity(r, "(x > y) sw b(z) = a(x) se (y sw z)", succ, q.sw, q.se, q.sw, a, b);
  check_identity(r, "(x * y) se b(z) = a(x) se (y se z)", star, q.se, q.se, q.se, a, b);
  return r;
}

BiHomAssociativeAlgebra yau_twist(const BiHomAssociativeAlgebra& s, const LinearMap& at, const LinearMap& bt) {
  std::vector<NamedOp> ops{{"mu", &s.mu}};
  require_shape(ops, s.alpha, s.beta);
  validate_twist(ops, s.alpha, s.beta, at, bt);
  return {s.mu.precompose(at, bt), at * s.alpha, bt * s.beta};
}

BiHomDendriform yau_twist(const BiHomDendriform& s, const LinearMap& at, const LinearMap& bt) {
  std::vector<NamedOp> ops{{"prec", &s.prec}, {"succ", &s.succ}};
  require_shape(ops, s.alpha, s.beta);
  validate_twist(ops, s.alpha, s.beta, at, bt);
  return {s.prec.precompose(at, bt), s.succ.precompose(at, bt), at * s.alpha, bt * s.beta};
}

BiHomTridendriform yau_twist(const BiHomTridendriform& s, const LinearMap& at, const LinearMap& bt) {
  std::vector<NamedOp> ops{{"prec", &s.prec}, {"succ", &s.succ}, {"dot", &s.dot}};
  require_shape(ops, s.alpha, s.beta);
  validate_twist(ops, s.alpha, s.beta, at, bt);
  return {s.prec.precompose(at, bt), s.succ.precompose(at, bt), s.dot.precompose(at, bt), at * s.alpha,
          bt * s.beta};
}

BiHomQuadri yau_twist(const BiHomQuadri& s, const LinearMap& at, const LinearMap& bt) {
  std::vector<NamedOp> ops{{"nw", &s.nw}, {"sw", &s.sw}, {"ne", &s.ne}, {"se", &s.se}};
  require_shape(ops, s.alpha, s.beta);
  validate_twist(ops, s.alpha, s.beta, at, bt);
  return {s.nw.precompose(at, bt), s.sw.precompose(at, bt), s.ne.precompose(at, bt), s.se.precompose(at, bt),
          at * s.alpha, bt * s.beta};
}

BiHomDendriform tridend_to_dend(const BiHomTridendriform& t) {
  require_passed(check_tridendriform(t, 1), "tridend_to_dend input is not BiHom-tridendriform");
  return {t.prec + t.dot, t.succ, t.alpha, t.beta};
}

BiHomAssociativeAlgebra total_product(const BiHomDendriform& d) {
  require_passed(check_dendriform(d, 1), "total_product input is not BiHom-dendriform");
  return {d.prec + d.succ, d.alpha, d.beta};
}

BiHomAssociativeAlgebra total_product(const BiHomTridendriform& t) {
  require_passed(check_tridendriform(t, 1), "total_product input is not BiHom-tridendriform");
  return {t.prec + t.succ + t.dot, t.alpha, t.beta};
}

BiHomAssociativeAlgebra total_product(const BiHomQuadri& q) {
  require_passed(check_quadri(q, 1), "total_product input is not a BiHom-quadri-algebra");
  return {q.star(), q.alpha, q.beta};
}

BiHomTridendriform embed_dend_in_tridend(const BiHomDendriform& d) {
  return {d.prec, d.succ, StructureTable(d.prec.field(), d.dim()), d.alpha, d.beta};
}

std::pair<BiHomDendriform, BiHomDendriform> quadri_projections(const BiHomQuadri& q) {
  require_passed(check_quadri(q, 1), "quadri_projections input is not a BiHom-quadri-algebra");
  return {BiHomDendriform{q.prec(), q.succ(), q.alpha, q.beta}, BiHomDendriform{q.wedge(), q.vee(), q.alpha, q.beta}};
}

BiHomQuadri tensor_quadri(const BiHomDendriform& a, const BiHomDendriform& b) {
  require_passed(check_dendriform(a, 1), "tensor_quadri first factor is not BiHom-dendriform");
  require_passed(check_dendriform(b, 1), "tensor_quadri second factor is not BiHom-dendriform");
  return {tensor_tables(a.prec, b.prec), tensor_tables(a.prec, b.succ), tensor_tables(a.succ, b.prec),
          tensor_tables(a.succ, b.succ), kron(a.alpha, b.alpha), kron(a.beta, b.beta)};
}

}  // namespace rbalg
