#include <gtest/gtest.h>

#include "generators.hpp"
#include "rbalg/families.hpp"
#include "test_util.hpp"

using namespace rbalg;
using namespace rbalg::testing;

namespace {

BiHomAssociativeAlgebra two_param_q() {
  Field q = Field::rational();
  return two_parameter_algebra(q.from_int(2), q.from_int(3));
}

RBOperator w1f2_q() {
  Field q = Field::rational();
  return {cols(q, {{"0", "0"}, {"3/2", "-1"}}), q.one()};
}

// Q[x]/(x^3) on {1, x, x^2}.
StructureTable truncated_poly(const Field& f) {
  StructureTable mu(f, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; i + j < 3; ++j) mu.set(i, j, i + j, f.one());
  }
  return mu;
}

}  // namespace

TEST(Structures, TwoParameterAlgebraAtSample) {
  auto A = two_param_q();
  Field q = A.field();
  EXPECT_EQ(A.mu.product(0, 1), vec(q, {"3", "-1"}));
  EXPECT_EQ(A.mu.product(1, 0), vec(q, {"-3/2", "2"}));
  EXPECT_EQ(A.mu.product(1, 1), vec(q, {"0", "3/2"}));
  EXPECT_EQ(A.alpha.column(1), vec(q, {"-3/2", "2"}));
  EXPECT_EQ(A.beta.column(1), vec(q, {"3", "-1"}));
  EXPECT_TRUE(check_bihom_associative(A).passed);
}

TEST(Structures, ClassicalAssociativePasses) {
  EXPECT_TRUE(check_bihom_associative(classical_algebra(truncated_poly(Field::rational()))).passed);
}

TEST(Structures, CorruptedTwoParameterAlgebraFailsWithWitness) {
  auto A = two_param_q();
  Field q = A.field();
  A.mu.set_product(0, 1, vec(q, {"0", "1"}));
  CheckReport r = check_bihom_associative(A);
  ASSERT_FALSE(r.passed);
  // Oracle: recompute the BiHom-associativity sides at every reported witness.
  for (const Violation& v : r.violations) {
    if (v.basis.size() != 3 || v.axiom.find("(xy)") == std::string::npos) continue;
    Vector x = Vector::basis(q, 2, v.basis[0]), y = Vector::basis(q, 2, v.basis[1]), z = Vector::basis(q, 2, v.basis[2]);
    Vector lhs = A.mu.apply(A.mu.apply(x, y), A.beta.apply(z));
    Vector rhs = A.mu.apply(A.alpha.apply(x), A.mu.apply(y, z));
    EXPECT_NE(lhs, rhs);
  }
  EXPECT_EQ(r.violations.size(), std::min(r.violation_count, r.cap));
}

TEST(Structures, ViolationCapBoundsStoredWitnesses) {
  Rng rng(31);
  Field f = Field::prime(5);
  BiHomAssociativeAlgebra bad{random_table(f, 3, 3, 3, rng), Matrix::identity(f, 3), Matrix::identity(f, 3)};
  CheckReport r = check_bihom_associative(bad, 2);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.violations.size(), 2u);
  EXPECT_GT(r.violation_count, 2u);
}

TEST(Structures, ZeroStructuresPass) {
  Rng rng(32);
  Field f = Field::prime(5);
  const StructureTable z(f, 2);
  Matrix a = cols(f, {{"2", "0"}, {"0", "3"}}), b = cols(f, {{"4", "0"}, {"0", "1"}});
  EXPECT_TRUE(check_dendriform({z, z, a, b}).passed);
  EXPECT_TRUE(check_tridendriform({z, z, z, a, b}).passed);
  EXPECT_TRUE(check_quadri({z, z, z, z, a, b}).passed);
  EXPECT_TRUE(total_product(BiHomDendriform{z, z, a, b}).mu.is_zero());
  auto [h, v] = quadri_projections({z, z, z, z, a, b});
  EXPECT_TRUE(h.prec.is_zero() && v.succ.is_zero());
  EXPECT_TRUE(tensor_quadri(BiHomDendriform{z, z, a, b}, BiHomDendriform{z, z, a, b}).star().is_zero());
}

TEST(Structures, RBDerivedDendriformAndSwap) {
  auto A = two_param_q();
  BiHomTridendriform t = rb_derive(A, w1f2_q());
  EXPECT_TRUE(check_tridendriform(t).passed);
  BiHomDendriform d = tridend_to_dend(t);
  EXPECT_TRUE(check_dendriform(d).passed);
  // Collapsed operations: x <' y = xR(y) + xy, x >' y = R(x)y.
  EXPECT_EQ(d.prec, t.prec + t.dot);
  EXPECT_EQ(d.succ, t.succ);
  BiHomDendriform swapped{d.succ, d.prec, d.alpha, d.beta};
  CheckReport r = check_dendriform(swapped);
  ASSERT_FALSE(r.passed);
  const Violation& v = r.violations.front();
  EXPECT_NE(v.lhs, v.rhs);
}

TEST(Structures, EmbedAndCollapse) {
  auto A = two_param_q();
  BiHomDendriform d = tridend_to_dend(rb_derive(A, w1f2_q()));
  BiHomTridendriform e = embed_dend_in_tridend(d);
  EXPECT_TRUE(e.dot.is_zero());
  EXPECT_TRUE(check_tridendriform(e).passed);
  BiHomDendriform back = tridend_to_dend(e);
  EXPECT_EQ(back.prec, d.prec);
  EXPECT_EQ(back.succ, d.succ);
  BiHomDendriform swapped{d.succ, d.prec, d.alpha, d.beta};
  EXPECT_FALSE(check_tridendriform(embed_dend_in_tridend(swapped)).passed);
}

TEST(Structures, InputAxiomsFail) {
  Field q = Field::rational();
  const StructureTable one = table(q, {{{"1"}}});
  const Matrix id = Matrix::identity(q, 1);
  EXPECT_THROW(total_product(BiHomDendriform{one, one, id, id}), InputAxiomsFail);
  EXPECT_THROW(tridend_to_dend(BiHomTridendriform{one, one, one, id, id}), InputAxiomsFail);
  EXPECT_THROW(tensor_quadri(BiHomDendriform{one, one, id, id}, BiHomDendriform{one, one, id, id}), InputAxiomsFail);
}

TEST(Structures, YauTwistIdentityAndTruncatedPoly) {
  Field q = Field::rational();
  auto A = classical_algebra(truncated_poly(q));
  auto same = yau_twist(A, A.alpha, A.beta);
  EXPECT_EQ(same.mu, A.mu);
  Matrix c = cols(q, {{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "4"}});
  auto T = yau_twist(A, c, c);
  EXPECT_EQ(T.mu.product(1, 1), vec(q, {"0", "0", "4"}));
  EXPECT_TRUE(check_bihom_associative(T).passed);
}

TEST(Structures, YauTwistDendriformByDistinctDiagonals) {
  // x k[x]/(x^4) with the weight-0 operator x^n -> x^n / n.
  Field q = Field::rational();
  StructureTable mu(q, 3);
  mu.set(0, 0, 1, q.one());
  mu.set(0, 1, 2, q.one());
  mu.set(1, 0, 2, q.one());
  auto A = classical_algebra(mu);
  RBOperator R{cols(q, {{"1", "0", "0"}, {"0", "1/2", "0"}, {"0", "0", "1/3"}}), q.zero()};
  BiHomDendriform d = tridend_to_dend(rb_derive(A, R));
  Matrix a = cols(q, {{"2", "0", "0"}, {"0", "4", "0"}, {"0", "0", "8"}});
  Matrix b = cols(q, {{"-1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}});
  EXPECT_TRUE(check_dendriform(yau_twist(d, a, b)).passed);
}

TEST(Structures, YauTwistRejectsBadPairs) {
  auto A = two_param_q();
  Field q = A.field();
  Matrix shift = cols(q, {{"0", "1"}, {"0", "0"}});
  EXPECT_THROW(yau_twist(A, shift, Matrix::identity(q, 2)), TwistHypothesisViolated);
}

TEST(Structures, TwistClosureOnRandomInstances) {
  Rng rng(33);
  for (const Field& f : {Field::prime(5), Field::rational()}) {
    for (int i = 0; i < 25; ++i) {
      TwistInstance t = random_twist_instance(f, rng);
      ASSERT_TRUE(check_bihom_associative(t.assoc).passed);
      ASSERT_TRUE(check_dendriform(t.dend).passed);
      ASSERT_TRUE(check_tridendriform(t.tridend).passed);
      ASSERT_TRUE(check_quadri(t.quadri).passed);
      EXPECT_TRUE(check_bihom_associative(yau_twist(t.assoc, t.assoc_atilde, t.assoc_btilde)).passed);
      EXPECT_TRUE(check_dendriform(yau_twist(t.dend, t.atilde, t.btilde)).passed);
      EXPECT_TRUE(check_tridendriform(yau_twist(t.tridend, t.atilde, t.btilde)).passed);
      EXPECT_TRUE(check_quadri(yau_twist(t.quadri, t.atilde, t.btilde)).passed);
      EXPECT_TRUE(check_dendriform(tridend_to_dend(t.tridend)).passed);
      EXPECT_TRUE(check_bihom_associative(total_product(t.tridend)).passed);
      EXPECT_TRUE(check_bihom_associative(total_product(t.quadri)).passed);
    }
  }
}

TEST(Structures, TensorQuadriAndProjections) {
  auto A = two_param_q();
  Field q = A.field();
  BiHomDendriform d1 = tridend_to_dend(rb_derive(A, w1f2_q()));
  BiHomDendriform d2 = tridend_to_dend(rb_derive(A, {Matrix::identity(q, 2).scaled(q.from_int(-1)), q.one()}));
  BiHomQuadri Q = tensor_quadri(d1, d2);
  EXPECT_EQ(Q.dim(), 4u);
  EXPECT_TRUE(check_quadri(Q).passed);
  EXPECT_EQ(Q.alpha, tensor2(d1.alpha, d2.alpha).matrix);
  EXPECT_EQ(Q.beta, tensor2(d1.beta, d2.beta).matrix);
  auto [h, v] = quadri_projections(Q);
  EXPECT_TRUE(check_dendriform(h).passed);
  EXPECT_TRUE(check_dendriform(v).passed);
  // Horizontal prec: (a1 (x) b1) < (a2 (x) b2) = (a1 < a2) (x) (b1 * b2).
  StructureTable star2 = d2.prec + d2.succ;
  EXPECT_EQ(h.prec, tensor_tables(d1.prec, star2));
  const StructureTable star = total_product(Q).mu;
  EXPECT_EQ(star, total_product(h).mu);
  EXPECT_EQ(star, total_product(v).mu);
  EXPECT_EQ(star, tensor_tables(d1.prec + d1.succ, star2));
}
