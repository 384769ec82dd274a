#include "rbalg/bimodules.hpp"

#include "axioms.hpp"

namespace rbalg {

namespace {

void require_shapes(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m) {
  const std::size_t n = a.dim(), d = m.dim();
  if (!m.alpha.is_square() || m.beta.rows() != d || !m.beta.is_square()) {
    throw DimensionMismatch("bimodule structure maps must be square of equal size");
  }
  const auto& l = m.left_action;
  const auto& r = m.right_action;
  if (l.left_dim() != n || l.right_dim() != d || l.out_dim() != d) {
    throw DimensionMismatch("left action must be A (x) M -> M");
  }
  if (r.left_dim() != d || r.right_dim() != n || r.out_dim() != d) {
    throw DimensionMismatch("right action must be M (x) A -> M");
  }
  if (m.field() != a.field()) throw FieldMismatch("bimodule over another field");
}

void require_pi_shape(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi) {
  require_shapes(a, m);
  if (pi.map.rows() != a.dim() || pi.map.cols() != m.dim()) {
    throw DimensionMismatch("GRB map must be " + std::to_string(a.dim()) + "x" + std::to_string(m.dim()));
  }
}

bool is_identity(const LinearMap& f) { return f.is_square() && f.equals(Matrix::identity(f.field(), f.rows())); }

}  // namespace

BiHomBimodule regular_bimodule(const BiHomAssociativeAlgebra& a) { return {a.mu, a.mu, a.alpha, a.beta}; }

CheckReport check_bimodule(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, std::size_t cap) {
  require_shapes(a, m);
  CheckReport rep(cap);
  detail::check_commute(rep, "aM(bM(m)) = bM(aM(m))", m.alpha, m.beta);
  detail::check_multiplicative(rep, "aM(a.m) = aA(a).aM(m)", m.alpha, a.alpha, m.alpha, m.left_action);
  detail::check_multiplicative(rep, "bM(a.m) = bA(a).bM(m)", m.beta, a.beta, m.beta, m.left_action);
  detail::check_multiplicative(rep, "aM(m.a) = aM(m).aA(a)", m.alpha, m.alpha, a.alpha, m.right_action);
  detail::check_multiplicative(rep, "bM(m.a) = bM(m).bA(a)", m.beta, m.beta, a.beta, m.right_action);
  detail::check_identity(rep, "(aa')b(m) = a(a)(a'm)", a.mu, m.left_action, m.left_action, m.left_action, a.alpha,
                         m.beta);
  detail::check_identity(rep, "(ma)b(a') = a(m)(aa')", m.right_action, m.right_action, m.right_action, a.mu, m.alpha,
                         a.beta);
  detail::check_identity(rep, "(am)b(a') = a(a)(ma')", m.left_action, m.right_action, m.left_action, m.right_action,
                         a.alpha, a.beta);
  return rep;
}

BiHomAssociativeAlgebra split_null_raw(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m) {
  require_shapes(a, m);
  const std::size_t n = a.dim(), d = m.dim(), total = n + d;
  const Field& f = a.field();
  StructureTable mu(f, total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mu.set(i, j, k, a.mu.at(i, j, k));
    }
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t k = 0; k < d; ++k) {
        mu.set(i, n + q, n + k, m.left_action.at(i, q, k));
        mu.set(n + q, i, n + k, m.right_action.at(q, i, k));
      }
    }
  }
  return {mu, direct_sum(a.alpha, m.alpha), direct_sum(a.beta, m.beta)};
}

BiHomAssociativeAlgebra split_null_extension(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m) {
  require_passed(check_bimodule(a, m, 1), "split_null_extension: not a bimodule");
  return split_null_raw(a, m);
}

BiHomBimodule yau_twist_bimodule(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const LinearMap& alpha_a,
                                 const LinearMap& beta_a, const LinearMap& alpha_m, const LinearMap& beta_m) {
  require_shapes(a, m);
  if (!is_identity(a.alpha) || !is_identity(a.beta)) {
    throw TwistHypothesisViolated("the algebra must be associative with identity structure maps");
  }
  if (!is_identity(m.alpha) || !is_identity(m.beta)) {
    throw TwistHypothesisViolated("the bimodule must carry identity structure maps");
  }
  if (!check_bihom_associative(a, 1).passed) throw TwistHypothesisViolated("the algebra is not associative");
  if (!check_bimodule(a, m, 1).passed) throw TwistHypothesisViolated("M is not a bimodule");
  BiHomBimodule target{m.left_action, m.right_action, alpha_m, beta_m};
  BiHomAssociativeAlgebra maps{a.mu, alpha_a, beta_a};
  require_shapes(maps, target);
  if (!maps_commute(alpha_a, beta_a)) throw TwistHypothesisViolated("alpha_A and beta_A do not commute");
  CheckReport mult(1);
  detail::check_multiplicative(mult, "alpha_A", alpha_a, a.mu);
  detail::check_multiplicative(mult, "beta_A", beta_a, a.mu);
  if (!mult.passed) throw TwistHypothesisViolated(mult.violations.front().axiom + " is not an algebra morphism");
  CheckReport compat(1);
  detail::check_commute(compat, "aM(bM(m)) = bM(aM(m))", alpha_m, beta_m);
  detail::check_multiplicative(compat, "aM(a.m) = aA(a).aM(m)", alpha_m, alpha_a, alpha_m, m.left_action);
  detail::check_multiplicative(compat, "bM(a.m) = bA(a).bM(m)", beta_m, beta_a, beta_m, m.left_action);
  detail::check_multiplicative(compat, "aM(m.a) = aM(m).aA(a)", alpha_m, alpha_m, alpha_a, m.right_action);
  detail::check_multiplicative(compat, "bM(m.a) = bM(m).bA(a)", beta_m, beta_m, beta_a, m.right_action);
  if (!compat.passed) throw TwistHypothesisViolated(compat.violations.front().axiom + " fails");
  return {m.left_action.precompose(alpha_a, beta_m), m.right_action.precompose(alpha_m, beta_a), alpha_m, beta_m};
}

CheckReport check_grb(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi,
                      std::size_t cap) {
  require_pi_shape(a, m, pi);
  const std::size_t d = m.dim();
  const LinearMap& p = pi.map;
  CheckReport rep(cap);
  for (std::size_t i = 0; i < d; ++i) {
    Vector pi_i = p.column(i);
    Vector ei = Vector::basis(a.field(), d, i);
    for (std::size_t j = 0; j < d; ++j) {
      Vector lhs = a.mu.apply(pi_i, p.column(j));
      Vector rhs = p.apply(m.left_action.apply(pi_i, Vector::basis(a.field(), d, j)) +
                           m.right_action.apply(ei, p.column(j)));
      if (!lhs.equals(rhs)) rep.add_violation({"pi(m)pi(n) = pi(pi(m)n + m pi(n))", {i, j}, lhs, rhs});
    }
  }
  rep.add_side_check("alpha_A∘pi = pi∘alpha_M", (a.alpha * p).equals(p * m.alpha));
  rep.add_side_check("beta_A∘pi = pi∘beta_M", (a.beta * p).equals(p * m.beta));
  return rep;
}

RBOperator grb_hat(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi) {
  require_pi_shape(a, m, pi);
  require_passed(check_bimodule(a, m, 1), "grb_hat: not a bimodule");
  const std::size_t n = a.dim(), d = m.dim();
  Matrix hat(a.field(), n + d, n + d);
  for (std::size_t q = 0; q < d; ++q) {
    for (std::size_t k = 0; k < n; ++k) hat.set(k, n + q, pi.map.at(k, q));
  }
  return {hat, a.field().zero()};
}

namespace {

void require_grb_hypotheses(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi,
                            const std::string& who) {
  require_pi_shape(a, m, pi);
  require_passed(check_bihom_associative(a, 1), who + ": algebra is not BiHom-associative");
  require_passed(check_bimodule(a, m, 1), who + ": not a bimodule");
  CheckReport rep = check_grb(a, m, pi, 1);
  require_passed(rep, who + ": not a GRB operator");
  if (!rep.all_side_checks_passed()) throw InputAxiomsFail(who + ": pi does not intertwine the structure maps");
}

}  // namespace

BiHomDendriform grb_to_dendriform(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m, const GRBOperator& pi) {
  require_grb_hypotheses(a, m, pi, "grb_to_dendriform");
  auto id = Matrix::identity(a.field(), m.dim());
  return {m.right_action.precompose(id, pi.map), m.left_action.precompose(pi.map, id), m.alpha, m.beta};
}

TransposedBimodule grb_transpose_actions(const BiHomAssociativeAlgebra& a, const BiHomBimodule& m,
                                         const GRBOperator& pi) {
  require_grb_hypotheses(a, m, pi, "grb_transpose_actions");
  const std::size_t n = a.dim(), d = m.dim();
  const Field& f = a.field();
  auto dend = grb_to_dendriform(a, m, pi);
  BiHomAssociativeAlgebra base{dend.prec + dend.succ, m.alpha, m.beta};
  const LinearMap& p = pi.map;
  StructureTable left(f, d, n, n), right(f, n, d, n);
  for (std::size_t q = 0; q < d; ++q) {
    for (std::size_t j = 0; j < n; ++j) {
      left.set_product(q, j, a.mu.apply(p.column(q), Vector::basis(f, n, j)) - p.apply(m.right_action.product(q, j)));
      right.set_product(j, q, a.mu.apply(Vector::basis(f, n, j), p.column(q)) - p.apply(m.left_action.product(j, q)));
    }
  }
  BiHomBimodule module{left, right, a.alpha, a.beta};
  return {base, module, split_null_raw(base, module)};
}

}  // namespace rbalg
