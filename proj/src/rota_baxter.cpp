#include "rbalg/rota_baxter.hpp"

#include "axioms.hpp"

namespace rbalg {

namespace {

void require_operator_shape(const LinearMap& m, std::size_t n, const std::string& what) {
  if (!m.is_square() || m.rows() != n) {
    throw DimensionMismatch(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

void require_commutes(const LinearMap& f, const LinearMap& g, const std::string& what) {
  if (!maps_commute(f, g)) throw InputAxiomsFail(what + " fails");
}

// Binary identity lhs(e_i, e_j) = rhs(e_i, e_j) over all basis pairs.
template <class L, class R>
void check_pairs(CheckReport& rep, const std::string& id, std::size_t n, L lhs, R rhs) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector l = lhs(i, j);
      Vector r = rhs(i, j);
      if (!l.equals(r)) rep.add_violation({id, {i, j}, std::move(l), std::move(r)});
    }
  }
}

void require_rb_hypotheses(const BiHomAssociativeAlgebra& a, const RBOperator& r, const std::string& who) {
  require_passed(check_bihom_associative(a, 1), who + ": algebra is not BiHom-associative");
  CheckReport rep = check_rota_baxter(a, r, 1);
  require_passed(rep, who + ": not a Rota-Baxter operator");
  if (!*rep.side_check("R commutes with alpha")) throw InputAxiomsFail(who + ": R does not commute with alpha");
  if (!*rep.side_check("R commutes with beta")) throw InputAxiomsFail(who + ": R does not commute with beta");
}

}  // namespace

CheckReport check_rota_baxter(const BiHomAssociativeAlgebra& a, const RBOperator& r, std::size_t cap) {
  const std::size_t n = a.dim();
  require_operator_shape(r.map, n, "Rota-Baxter map");
  if (r.weight.field() != a.field() || r.map.field() != a.field()) throw FieldMismatch("Rota-Baxter data over another field");
  CheckReport rep(cap);
  const LinearMap& R = r.map;
  check_pairs(
      rep, "R(x)R(y) = R(R(x)y + xR(y) + w xy)", n,
      [&](std::size_t i, std::size_t j) { return a.mu.apply(R.column(i), R.column(j)); },
      [&](std::size_t i, std::size_t j) {
        Vector inner = a.mu.apply(R.column(i), Vector::basis(a.field(), n, j)) +
                       a.mu.apply(Vector::basis(a.field(), n, i), R.column(j)) + a.mu.product(i, j).scaled(r.weight);
        return R.apply(inner);
      });
  rep.add_side_check("R commutes with alpha", maps_commute(R, a.alpha));
  rep.add_side_check("R commutes with beta", maps_commute(R, a.beta));
  return rep;
}

BiHomTridendriform rb_split_tables(const BiHomAssociativeAlgebra& a, const RBOperator& r) {
  require_operator_shape(r.map, a.dim(), "Rota-Baxter map");
  auto id = Matrix::identity(a.field(), a.dim());
  return {a.mu.precompose(id, r.map), a.mu.precompose(r.map, id), a.mu.scaled(r.weight), a.alpha, a.beta};
}

BiHomTridendriform rb_derive(const BiHomAssociativeAlgebra& a, const RBOperator& r) {
  require_rb_hypotheses(a, r, "rb_derive");
  return rb_split_tables(a, r);
}

BiHomAssociativeAlgebra rb_double_product(const BiHomAssociativeAlgebra& a, const RBOperator& r) {
  require_rb_hypotheses(a, r, "rb_double_product");
  auto t = rb_split_tables(a, r);
  return {t.prec + t.succ + t.dot, a.alpha, a.beta};
}

CheckReport check_double_product_morphism(const BiHomAssociativeAlgebra& a, const RBOperator& r, std::size_t cap) {
  auto d = rb_double_product(a, r);
  CheckReport rep(cap);
  const LinearMap& R = r.map;
  check_pairs(
      rep, "R(x * y) = R(x)R(y)", a.dim(), [&](std::size_t i, std::size_t j) { return R.apply(d.mu.product(i, j)); },
      [&](std::size_t i, std::size_t j) { return a.mu.apply(R.column(i), R.column(j)); });
  return rep;
}

CheckReport check_rb_on_dendriform(const BiHomDendriform& d, const RBOperator& r, std::size_t cap) {
  if (!r.weight.is_zero()) throw NonzeroWeight("Rota-Baxter operators on dendriform algebras need weight 0");
  const std::size_t n = d.dim();
  require_operator_shape(r.map, n, "Rota-Baxter map");
  const LinearMap& R = r.map;
  CheckReport rep(cap);
  for (const auto& [name, op] : {std::pair<std::string, const StructureTable*>{">", &d.succ}, {"<", &d.prec}}) {
    check_pairs(
        rep, "R(x) " + name + " R(y) = R(x " + name + " R(y) + R(x) " + name + " y)", n,
        [&](std::size_t i, std::size_t j) { return op->apply(R.column(i), R.column(j)); },
        [&](std::size_t i, std::size_t j) {
          Vector ei = Vector::basis(d.field(), n, i), ej = Vector::basis(d.field(), n, j);
          return R.apply(op->apply(ei, R.column(j)) + op->apply(R.column(i), ej));
        });
  }
  detail::check_commute(rep, "R(a(x)) = a(R(x))", R, d.alpha);
  detail::check_commute(rep, "R(b(x)) = b(R(x))", R, d.beta);
  return rep;
}

BiHomQuadri rb_dendriform_to_quadri(const BiHomDendriform& d, const RBOperator& r) {
  require_passed(check_dendriform(d, 1), "rb_dendriform_to_quadri: input is not BiHom-dendriform");
  require_passed(check_rb_on_dendriform(d, r, 1), "rb_dendriform_to_quadri: not a Rota-Baxter operator");
  auto id = Matrix::identity(d.field(), d.dim());
  return {d.prec.precompose(id, r.map), d.prec.precompose(r.map, id), d.succ.precompose(id, r.map),
          d.succ.precompose(r.map, id), d.alpha, d.beta};
}

BiHomQuadri commuting_pair_quadri(const BiHomAssociativeAlgebra& a, const RBOperator& r, const RBOperator& p) {
  if (!r.weight.is_zero()) throw InputAxiomsFail("commuting_pair_quadri: R has nonzero weight");
  if (!p.weight.is_zero()) throw InputAxiomsFail("commuting_pair_quadri: P has nonzero weight");
  require_rb_hypotheses(a, r, "commuting_pair_quadri (R)");
  require_rb_hypotheses(a, p, "commuting_pair_quadri (P)");
  require_commutes(r.map, p.map, "commuting_pair_quadri: R∘P = P∘R");
  auto dr = rb_derive(a, r);
  return rb_dendriform_to_quadri(BiHomDendriform{dr.prec, dr.succ, a.alpha, a.beta}, p);
}

CheckReport check_one_sided_baxter(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& b, std::size_t cap) {
  const std::size_t n = a.dim();
  require_operator_shape(b.map, n, "Baxter map");
  const LinearMap& P = b.map;
  CheckReport rep(cap);
  if (b.side == BaxterSide::right) {
    check_pairs(
        rep, "P(x)P(y) = P(P(x)y)", n, [&](std::size_t i, std::size_t j) { return a.mu.apply(P.column(i), P.column(j)); },
        [&](std::size_t i, std::size_t j) {
          return P.apply(a.mu.apply(P.column(i), Vector::basis(a.field(), n, j)));
        });
  } else {
    check_pairs(
        rep, "Q(x)Q(y) = Q(xQ(y))", n, [&](std::size_t i, std::size_t j) { return a.mu.apply(P.column(i), P.column(j)); },
        [&](std::size_t i, std::size_t j) {
          return P.apply(a.mu.apply(Vector::basis(a.field(), n, i), P.column(j)));
        });
  }
  rep.add_side_check("commutes with alpha", maps_commute(P, a.alpha));
  rep.add_side_check("commutes with beta", maps_commute(P, a.beta));
  return rep;
}

BiHomAssociativeAlgebra baxter_pair_product(const BiHomAssociativeAlgebra& a, const OneSidedBaxter& p,
                                            const OneSidedBaxter& q) {
  if (p.side != BaxterSide::right) throw InputAxiomsFail("baxter_pair_product: P must be a right Baxter operator");
  if (q.side != BaxterSide::left) throw InputAxiomsFail("baxter_pair_product: Q must be a left Baxter operator");
  require_passed(check_bihom_associative(a, 1), "baxter_pair_product: algebra is not BiHom-associative");
  require_passed(check_one_sided_baxter(a, p, 1), "baxter_pair_product: P is not right Baxter");
  require_passed(check_one_sided_baxter(a, q, 1), "baxter_pair_product: Q is not left Baxter");
  require_commutes(p.map, q.map, "baxter_pair_product: P∘Q = Q∘P");
  require_commutes(p.map, a.alpha, "baxter_pair_product: P∘alpha = alpha∘P");
  require_commutes(p.map, a.beta, "baxter_pair_product: P∘beta = beta∘P");
  require_commutes(q.map, a.alpha, "baxter_pair_product: Q∘alpha = alpha∘Q");
  require_commutes(q.map, a.beta, "baxter_pair_product: Q∘beta = beta∘Q");
  return {a.mu.precompose(p.map, q.map), a.alpha, a.beta};
}

CheckReport rb_persists_under_twist(const BiHomAssociativeAlgebra& a, const RBOperator& r, const LinearMap& atilde,
                                    const LinearMap& btilde) {
  require_operator_shape(r.map, a.dim(), "Rota-Baxter map");
  if (!maps_commute(atilde, r.map)) throw TwistHypothesisViolated("atilde and R do not commute");
  if (!maps_commute(btilde, r.map)) throw TwistHypothesisViolated("btilde and R do not commute");
  return check_rota_baxter(yau_twist(a, atilde, btilde), r);
}

}  // namespace rbalg
