#include "rbalg/pseudotwistors.hpp"

#include "axioms.hpp"

namespace rbalg {

namespace {

// Splits a tensor basis index into its base-n digits, most significant first.
std::vector<std::size_t> digits(std::size_t index, std::size_t n, std::size_t arity) {
  std::vector<std::size_t> d(arity);
  for (std::size_t k = arity; k-- > 0;) {
    d[k] = index % n;
    index /= n;
  }
  return d;
}

void check_matrices(CheckReport& rep, const std::string& id, const Matrix& lhs, const Matrix& rhs, std::size_t n,
                    std::size_t arity) {
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    Vector l = lhs.column(j);
    Vector r = rhs.column(j);
    if (!l.equals(r)) rep.add_violation({id, digits(j, n, arity), std::move(l), std::move(r)});
  }
}

void require_dims(const BiHomAssociativeAlgebra& a, const TensorSquareMap& t, const LinearMap& at,
                  const LinearMap& bt) {
  const std::size_t n = a.dim();
  if (t.base_dim != n) throw DimensionMismatch("T acts on another base dimension");
  if (!at.is_square() || at.rows() != n || !bt.is_square() || bt.rows() != n) {
    throw DimensionMismatch("atilde and btilde must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

void require_cube(const BiHomAssociativeAlgebra& a, const TensorCubeMap& c) {
  if (c.base_dim != a.dim()) throw DimensionMismatch("companion acts on another base dimension");
}

// Hypotheses shared by both flavours.
void check_structure_hypotheses(CheckReport& rep, const BiHomAssociativeAlgebra& a, const Matrix& t,
                                const LinearMap& at, const LinearMap& bt) {
  detail::check_multiplicative(rep, "atilde(xy) = atilde(x)atilde(y)", at, a.mu);
  detail::check_multiplicative(rep, "btilde(xy) = btilde(x)btilde(y)", bt, a.mu);
  detail::check_commute(rep, "atilde∘btilde = btilde∘atilde", at, bt);
  detail::check_commute(rep, "atilde∘alpha = alpha∘atilde", at, a.alpha);
  detail::check_commute(rep, "atilde∘beta = beta∘atilde", at, a.beta);
  detail::check_commute(rep, "btilde∘alpha = alpha∘btilde", bt, a.alpha);
  detail::check_commute(rep, "btilde∘beta = beta∘btilde", bt, a.beta);
  detail::check_commute(rep, "T∘(alpha (x) alpha) = (alpha (x) alpha)∘T", t, kron(a.alpha, a.alpha));
  detail::check_commute(rep, "T∘(beta (x) beta) = (beta (x) beta)∘T", t, kron(a.beta, a.beta));
  detail::check_commute(rep, "T∘(atilde (x) atilde) = (atilde (x) atilde)∘T", t, kron(at, at));
  detail::check_commute(rep, "T∘(btilde (x) btilde) = (btilde (x) btilde)∘T", t, kron(bt, bt));
}

Matrix identity(const BiHomAssociativeAlgebra& a) { return Matrix::identity(a.field(), a.dim()); }

bool is_identity(const LinearMap& f) { return f.equals(Matrix::identity(f.field(), f.rows())); }

}  // namespace

WeakPseudotwistor identity_pseudotwistor(const Field& field, std::size_t n) {
  const std::size_t n2 = n * n;
  return {TensorSquareMap(n, Matrix::identity(field, n2)), TensorCubeMap(n, Matrix::identity(field, n2 * n)),
          Matrix::identity(field, n), Matrix::identity(field, n)};
}

CheckReport check_weak_pseudotwistor(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& w, std::size_t cap) {
  require_dims(a, w.T, w.atilde, w.btilde);
  require_cube(a, w.companion);
  const std::size_t n = a.dim();
  const Matrix mu = a.mu.as_matrix();
  const Matrix& T = w.T.matrix;
  const Matrix& C = w.companion.matrix;
  const Matrix muT = mu * T;
  CheckReport rep(cap);
  check_matrices(rep, "T∘((atilde∘alpha) (x) (mu∘T)) = (alpha (x) mu)∘companion", T * kron(w.atilde * a.alpha, muT),
                 kron(a.alpha, mu) * C, n, 3);
  check_matrices(rep, "T∘((mu∘T) (x) (btilde∘beta)) = (mu (x) beta)∘companion", T * kron(muT, w.btilde * a.beta),
                 kron(mu, a.beta) * C, n, 3);
  check_structure_hypotheses(rep, a, T, w.atilde, w.btilde);
  return rep;
}

CheckReport check_pseudotwistor(const BiHomAssociativeAlgebra& a, const PseudotwistorWithCompanions& p,
                                std::size_t cap) {
  require_dims(a, p.T, p.atilde, p.btilde);
  require_cube(a, p.T1);
  require_cube(a, p.T2);
  const std::size_t n = a.dim();
  const Matrix mu = a.mu.as_matrix();
  const Matrix& T = p.T.matrix;
  const Matrix id = identity(a);
  const Matrix alpha_mu = kron(a.alpha, mu);
  const Matrix mu_beta = kron(mu, a.beta);
  CheckReport rep(cap);
  check_matrices(rep, "T∘(alpha (x) mu) = (alpha (x) mu)∘T1∘(T (x) id)", T * alpha_mu,
                 alpha_mu * p.T1.matrix * kron(T, id), n, 3);
  check_matrices(rep, "T∘(mu (x) beta) = (mu (x) beta)∘T2∘(id (x) T)", T * mu_beta,
                 mu_beta * p.T2.matrix * kron(id, T), n, 3);
  check_matrices(rep, "T1∘(T (x) id)∘(atilde (x) T) = T2∘(id (x) T)∘(T (x) btilde)",
                 p.T1.matrix * kron(T, id) * kron(p.atilde, T), p.T2.matrix * kron(id, T) * kron(T, p.btilde), n, 3);
  check_structure_hypotheses(rep, a, T, p.atilde, p.btilde);
  return rep;
}

WeakPseudotwistor induced_weak_pseudotwistor(const PseudotwistorWithCompanions& p) {
  const std::size_t n = p.T.base_dim;
  if (p.T1.base_dim != n || p.atilde.rows() != n) throw DimensionMismatch("pseudotwistor data of mixed dimensions");
  const Matrix id = Matrix::identity(p.atilde.field(), n);
  Matrix c = p.T1.matrix * kron(p.T.matrix, id) * kron(p.atilde, p.T.matrix);
  return {p.T, TensorCubeMap(n, std::move(c)), p.atilde, p.btilde};
}

BiHomAssociativeAlgebra twisted_algebra(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& w) {
  require_passed(check_bihom_associative(a, 1), "twisted_algebra: algebra is not BiHom-associative");
  require_passed(check_weak_pseudotwistor(a, w, 1), "twisted_algebra: not a weak pseudotwistor");
  const std::size_t n = a.dim();
  return {StructureTable::from_matrix(a.mu.as_matrix() * w.T.matrix, n, n), w.atilde * a.alpha, w.btilde * a.beta};
}

WeakPseudotwistor rb_pseudotwistor(const BiHomAssociativeAlgebra& a, const RBOperator& r) {
  require_passed(check_bihom_associative(a, 1), "rb_pseudotwistor: algebra is not BiHom-associative");
  CheckReport rep = check_rota_baxter(a, r, 1);
  require_passed(rep, "rb_pseudotwistor: not a Rota-Baxter operator");
  if (!rep.all_side_checks_passed()) throw InputAxiomsFail("rb_pseudotwistor: R does not commute with alpha, beta");
  const Matrix& R = r.map;
  const Matrix id = identity(a);
  const Scalar& w = r.weight;
  Matrix t = kron(R, id) + kron(id, R) + kron(id, id).scaled(w);
  Matrix c = kron(kron(R, R), id) + kron(kron(R, id), R) + kron(kron(id, R), R) +
             (kron(kron(R, id), id) + kron(kron(id, R), id) + kron(kron(id, id), R)).scaled(w) +
             kron(kron(id, id), id).scaled(w * w);
  return {TensorSquareMap(a.dim(), std::move(t)), TensorCubeMap(a.dim(), std::move(c)), id, id};
}

WeakPseudotwistor compose_pseudotwistors(const BiHomAssociativeAlgebra& a, const WeakPseudotwistor& t,
                                         const WeakPseudotwistor& d, ComposeMode mode) {
  for (const auto* w : {&t, &d}) {
    if (!is_identity(w->atilde) || !is_identity(w->btilde)) {
      throw HypothesisViolated("composition needs atilde = btilde = id");
    }
  }
  if (!check_weak_pseudotwistor(a, t, 1).passed) throw HypothesisViolated("T is not a weak pseudotwistor");
  if (!check_weak_pseudotwistor(a, d, 1).passed) throw HypothesisViolated("D is not a weak pseudotwistor");
  const std::size_t n = a.dim();
  const Matrix mu = a.mu.as_matrix();
  const Matrix id = identity(a);
  const Matrix& T = t.T.matrix;
  const Matrix& D = d.T.matrix;
  const Matrix& DC = d.companion.matrix;
  CheckReport rep(1);
  if (mode == ComposeMode::general) {
    check_matrices(rep, "D∘(alpha (x) (mu∘T∘D)) = (alpha (x) (mu∘T))∘companion_D", D * kron(a.alpha, mu * T * D),
                   kron(a.alpha, mu * T) * DC, n, 3);
    check_matrices(rep, "D∘((mu∘T∘D) (x) beta) = ((mu∘T) (x) beta)∘companion_D", D * kron(mu * T * D, a.beta),
                   kron(mu * T, a.beta) * DC, n, 3);
  } else {
    check_matrices(rep, "mu∘T∘D = mu∘D∘T", mu * T * D, mu * D * T, n, 2);
    check_matrices(rep, "companion_D∘(id (x) T) = (id (x) T)∘companion_D", DC * kron(id, T), kron(id, T) * DC, n, 3);
    check_matrices(rep, "companion_D∘(T (x) id) = (T (x) id)∘companion_D", DC * kron(T, id), kron(T, id) * DC, n, 3);
  }
  if (!rep.passed) throw HypothesisViolated(rep.violations.front().axiom + " fails");
  return {TensorSquareMap(n, T * D), TensorCubeMap(n, t.companion.matrix * DC), id, id};
}

WeakPseudotwistor baxter_pair_pseudotwistor(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& p,
                                            const OneSidedBaxter& q) {
  // Same hypotheses as the product it twists to.
  baxter_pair_product(a, p, q);
  const Matrix id = identity(a);
  return {tensor2(p.map, q.map), tensor3(p.map, p.map * q.map, q.map), id, id};
}

}  // namespace rbalg
