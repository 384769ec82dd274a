#include <gtest/gtest.h>

#include "generators.hpp"
#include "rbalg/families.hpp"
#include "rbalg/search.hpp"
#include "test_util.hpp"

using namespace rbalg;
using namespace rbalg::testing;

namespace {

BiHomAssociativeAlgebra two_param_q() {
  Field q = Field::rational();
  return two_parameter_algebra(q.from_int(2), q.from_int(3));
}

// u.v = w, v.u = 2w on <u, v, w>.
BiHomAssociativeAlgebra graded(const Field& f) {
  StructureTable mu(f, 3);
  mu.set(0, 1, 2, f.one());
  mu.set(1, 0, 2, f.from_int(2));
  return classical_algebra(mu);
}

Matrix diag(const Field& f, const std::vector<std::string>& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, f.parse(d[i]));
  return m;
}

// Direct expansion of x y = sum_{i,j} x_i y_j mu(e_i, e_j) for the double product.
StructureTable double_product_oracle(const BiHomAssociativeAlgebra& a, const RBOperator& r) {
  const std::size_t n = a.dim();
  StructureTable out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = Vector::basis(a.field(), n, i), y = Vector::basis(a.field(), n, j);
      out.set_product(i, j,
                      a.mu.apply(x, r.map.apply(y)) + a.mu.apply(r.map.apply(x), y) + a.mu.apply(x, y).scaled(r.weight));
    }
  }
  return out;
}

}  // namespace

TEST(RotaBaxter, WeightZeroFamilyPassesButDoesNotCommute) {
  auto A = two_param_q();
  Field q = A.field();
  RBOperator R{cols(q, {{"0", "0"}, {"5", "0"}}), q.zero()};
  CheckReport r = check_rota_baxter(A, R);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(*r.side_check("R commutes with alpha"));
  EXPECT_THROW(rb_derive(A, R), InputAxiomsFail);
  // The unchecked split still gives e2 < e2 = mu(e2, 5 e1).
  EXPECT_EQ(rb_split_tables(A, R).prec.product(1, 1), vec(q, {"-15/2", "10"}));
}

TEST(RotaBaxter, MinusIdentityAndZero) {
  Rng rng(41);
  Field f = Field::prime(5);
  for (int i = 0; i < 20; ++i) {
    TwistInstance t = random_twist_instance(f, rng);
    const std::size_t n = t.assoc.dim();
    EXPECT_TRUE(check_rota_baxter(t.assoc, {Matrix::identity(f, n).scaled(f.from_int(-1)), f.one()}).passed);
    EXPECT_TRUE(check_rota_baxter(t.assoc, {Matrix(f, n, n), random_scalar(f, rng)}).passed);
  }
}

TEST(RotaBaxter, DeriveZeroOperator) {
  auto A = two_param_q();
  Field q = A.field();
  BiHomTridendriform t = rb_derive(A, {Matrix(q, 2, 2), q.zero()});
  EXPECT_TRUE(t.prec.is_zero() && t.succ.is_zero() && t.dot.is_zero());
  EXPECT_TRUE(rb_double_product(A, {Matrix(q, 2, 2), q.zero()}).mu.is_zero());
}

TEST(RotaBaxter, DoubleProductOfMinusIdentityNegates) {
  auto A = two_param_q();
  Field q = A.field();
  auto D = rb_double_product(A, {Matrix::identity(q, 2).scaled(q.from_int(-1)), q.one()});
  EXPECT_EQ(D.mu, A.mu.scaled(q.from_int(-1)));
  EXPECT_TRUE(check_bihom_associative(D).passed);
}

TEST(RotaBaxter, CommutingWeightOneOperators) {
  auto A = two_param_q();
  Field q = A.field();
  for (const char* r : {"3/2", "-3/2"}) {
    // w1f2 at r = b/a and w1f1 at r = -b/a.
    LinearMap m = std::string(r) == "3/2" ? family_map("w1f2", q, {{"r", q.parse(r)}})
                                         : family_map("w1f1", q, {{"r", q.parse(r)}});
    RBOperator R{m, q.one()};
    CheckReport rep = check_rota_baxter(A, R);
    ASSERT_TRUE(rep.passed) << r;
    ASSERT_TRUE(rep.all_side_checks_passed()) << r;
    auto T = rb_derive(A, R);
    EXPECT_TRUE(check_tridendriform(T).passed);
    auto D = rb_double_product(A, R);
    EXPECT_TRUE(check_bihom_associative(D).passed);
    EXPECT_EQ(D.mu, total_product(T).mu);
    EXPECT_EQ(D.mu, double_product_oracle(A, R));
    EXPECT_TRUE(check_double_product_morphism(A, R).passed);
  }
  // w1f2 at r = 1 satisfies the identity but breaks the hypotheses.
  RBOperator bad{family_map("w1f2", q, {{"r", q.one()}}), q.one()};
  EXPECT_TRUE(check_rota_baxter(A, bad).passed);
  EXPECT_THROW(rb_double_product(A, bad), InputAxiomsFail);
}

TEST(RotaBaxter, ExhaustiveDerivationClosureOverSmallFields) {
  // Every operator of weight 0 or 1 on every 2-dim associative algebra over F_2, F_3.
  std::size_t exercised = 0;
  for (std::uint64_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (const auto& A : associative_tables(f, 2)) {
      for (const Scalar& w : {f.zero(), f.one()}) {
        SearchResult res = enumerate_rb(A, w);
        for (const auto& m : res.operators) {
          RBOperator R{m, w};
          ASSERT_TRUE(check_rota_baxter(A, R).passed);
          auto T = rb_derive(A, R);
          EXPECT_TRUE(check_tridendriform(T).passed);
          auto D = rb_double_product(A, R);
          EXPECT_TRUE(check_bihom_associative(D).passed);
          EXPECT_EQ(D.mu, total_product(T).mu);
          EXPECT_TRUE(check_double_product_morphism(A, R).passed);
          ++exercised;
        }
      }
    }
  }
  EXPECT_GT(exercised, 1000u);
}

TEST(RotaBaxter, DendriformOperators) {
  Field q = Field::rational();
  auto A = graded(q);
  RBOperator R{diag(q, {"1", "1", "1/2"}), q.zero()};
  RBOperator P{diag(q, {"2", "1", "2/3"}), q.zero()};
  BiHomDendriform d = tridend_to_dend(rb_derive(A, R));
  EXPECT_TRUE(check_rb_on_dendriform(d, {Matrix(q, 3, 3), q.zero()}).passed);
  EXPECT_TRUE(check_rb_on_dendriform(d, P).passed);
  EXPECT_THROW(check_rb_on_dendriform(d, {P.map, q.one()}), NonzeroWeight);
  // R = id doubles the right side.
  EXPECT_FALSE(check_rb_on_dendriform(d, {Matrix::identity(q, 3), q.zero()}).passed);

  BiHomQuadri Q = rb_dendriform_to_quadri(d, P);
  EXPECT_TRUE(check_quadri(Q).passed);
  // Wedge: x ^ y = x * P(y) with * the total product of d.
  StructureTable star = d.prec + d.succ;
  EXPECT_EQ(Q.wedge(), star.precompose(Matrix::identity(q, 3), P.map));
  // Vertical projection equals the dendriform of P on (A, *).
  BiHomDendriform vert = quadri_projections(Q).second;
  BiHomDendriform direct = tridend_to_dend(rb_derive(total_product(d), P));
  EXPECT_EQ(vert.prec, direct.prec);
  EXPECT_EQ(vert.succ, direct.succ);
  EXPECT_TRUE(rb_dendriform_to_quadri(d, {Matrix(q, 3, 3), q.zero()}).star().is_zero());
}

TEST(RotaBaxter, CommutingPairQuadri) {
  Field q = Field::rational();
  auto A = graded(q);
  RBOperator R{diag(q, {"1", "1", "1/2"}), q.zero()};
  RBOperator P{diag(q, {"2", "1", "2/3"}), q.zero()};
  BiHomQuadri Q = commuting_pair_quadri(A, R, P);
  EXPECT_TRUE(check_quadri(Q).passed);
  auto [h, v] = quadri_projections(Q);
  EXPECT_TRUE(check_dendriform(h).passed);
  EXPECT_TRUE(check_dendriform(v).passed);
  // a * b = RP(a)b + R(a)P(b) + P(a)R(b) + aRP(b).
  const Matrix id = Matrix::identity(q, 3), RP = R.map * P.map;
  StructureTable m2 = A.mu.precompose(RP, id) + A.mu.precompose(R.map, P.map) + A.mu.precompose(P.map, R.map) +
                      A.mu.precompose(id, RP);
  EXPECT_EQ(total_product(Q).mu, m2);
  EXPECT_TRUE(commuting_pair_quadri(A, R, {Matrix(q, 3, 3), q.zero()}).star().is_zero());
  EXPECT_EQ(commuting_pair_quadri(A, R, R).nw, A.mu.precompose(id, R.map * R.map));
  RBOperator noncommuting{cols(q, {{"0", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}}), q.zero()};
  EXPECT_THROW(commuting_pair_quadri(A, R, noncommuting), InputAxiomsFail);
}

TEST(RotaBaxter, OneSidedBaxter) {
  Rng rng(42);
  Field f = Field::prime(5);
  auto A = graded(f);
  EXPECT_TRUE(check_one_sided_baxter(A, {Matrix(f, 3, 3), BaxterSide::right}).passed);
  EXPECT_TRUE(check_one_sided_baxter(A, {Matrix::identity(f, 3), BaxterSide::left}).passed);
  auto id = baxter_pair_product(A, {Matrix::identity(f, 3), BaxterSide::right}, {Matrix::identity(f, 3), BaxterSide::left});
  EXPECT_EQ(id.mu, A.mu);
  auto zero = baxter_pair_product(A, {Matrix(f, 3, 3), BaxterSide::right}, {Matrix(f, 3, 3), BaxterSide::left});
  EXPECT_TRUE(zero.mu.is_zero());
  // Right Baxter persists under a Yau twist by commuting diagonal maps.
  SearchResult right = enumerate_baxter(classical_algebra(table(f, {{{"1", "0"}, {"0", "1"}}, {{"0", "1"}, {"0", "0"}}})),
                                        BaxterSide::right);
  ASSERT_FALSE(right.operators.empty());
  auto base = classical_algebra(table(f, {{{"1", "0"}, {"0", "1"}}, {{"0", "1"}, {"0", "0"}}}));
  Matrix c = cols(f, {{"1", "0"}, {"0", "3"}});
  auto twisted = yau_twist(base, c, c);
  for (const auto& P : right.operators) {
    if (!maps_commute(P, c)) continue;
    EXPECT_TRUE(check_one_sided_baxter(twisted, {P, BaxterSide::right}).passed);
  }
}

TEST(RotaBaxter, PersistsUnderTwist) {
  Field q = Field::rational();
  // Q[x]/(x^3) on {1, x, x^2}; R kills 1 and fixes x, x^2.
  StructureTable mu(q, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; i + j < 3; ++j) mu.set(i, j, i + j, q.one());
  }
  auto A = classical_algebra(mu);
  RBOperator R{diag(q, {"0", "1", "1"}), q.from_int(-1)};
  ASSERT_TRUE(check_rota_baxter(A, R).passed);
  Matrix c = diag(q, {"1", "2", "4"});
  EXPECT_TRUE(rb_persists_under_twist(A, R, c, c).passed);
  EXPECT_EQ(rb_persists_under_twist(A, R, A.alpha, A.beta).passed, check_rota_baxter(A, R).passed);
  Matrix shift = cols(q, {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  EXPECT_THROW(rb_persists_under_twist(A, R, shift, shift), TwistHypothesisViolated);
}
