#include <gtest/gtest.h>

#include <cstdlib>

#include "generators.hpp"
#include "rbalg/families.hpp"
#include "rbalg/search.hpp"
#include "test_util.hpp"

using namespace rbalg;
using namespace rbalg::testing;

namespace {

BiHomAssociativeAlgebra idempotent(const Field& f) {
  StructureTable mu(f, 1);
  mu.set(0, 0, 0, f.one());
  return classical_algebra(mu);
}

BiHomAssociativeAlgebra two_param_mod(std::uint64_t p) {
  Field f = Field::prime(p);
  return two_parameter_algebra(f.from_int(2), f.from_int(3));
}

}  // namespace

TEST(Families, CatalogueAndLookup) {
  EXPECT_EQ(rb_families().size(), 6u);
  for (const char* id : {"w0f1", "w0f2", "w1f1", "w1f2", "w1f3", "w1f4"}) EXPECT_EQ(find_family(id).id, id);
  EXPECT_THROW(find_family("w2f1"), UnknownFamily);
}

TEST(Families, SymbolicAlgebraPasses) {
  Field f = Field::rational_function({"a", "b"});
  EXPECT_TRUE(check_bihom_associative(two_parameter_algebra(f)).passed);
  Field q = Field::rational();
  EXPECT_THROW(two_parameter_algebra(q.zero(), q.one()), ZeroDivision);
}

TEST(Families, AllSymbolicPass) {
  for (const auto& fam : rb_families()) EXPECT_TRUE(verify_parametric_family(fam.id, FamilyMode::symbolic).passed) << fam.id;
}

TEST(Families, SampledModes) {
  EXPECT_TRUE(verify_parametric_family("w1f3", FamilyMode::sampled, {{{"a", 2}, {"b", 3}}}).passed);
  EXPECT_THROW(verify_parametric_family("w0f2", FamilyMode::sampled, {{{"a", 2}, {"b", 3}, {"r1", 1}, {"r2", 0}}}),
               EvalSingular);
  EXPECT_TRUE(verify_parametric_family("w0f1", FamilyMode::sampled,
                                       {{{"a", 2}, {"b", 3}, {"r", 5}}, {{"a", mpq_class(1, 2)}, {"b", -7}, {"r", 1}}})
                  .passed);
}

TEST(Families, MapsMatchFormulas) {
  Field q = Field::rational();
  EXPECT_EQ(family_map("w0f1", q, {{"r", q.from_int(5)}}), cols(q, {{"0", "0"}, {"5", "0"}}));
  EXPECT_EQ(family_map("w1f3", q, {}), Matrix::identity(q, 2).scaled(q.from_int(-1)));
  EXPECT_THROW(family_map("w0f1", q, {}), IncompleteAssignment);
}

TEST(Search, IdempotentOverF3) {
  Field f = Field::prime(3);
  SearchResult w0 = enumerate_rb(idempotent(f), f.zero());
  ASSERT_EQ(w0.operators.size(), 1u);
  EXPECT_TRUE(w0.operators[0].is_zero());
  SearchResult w1 = enumerate_rb(idempotent(f), f.one());
  ASSERT_EQ(w1.operators.size(), 2u);
  EXPECT_EQ(w1.operators[0].at(0, 0).residue(), 0u);
  EXPECT_EQ(w1.operators[1].at(0, 0).residue(), 2u);
  EXPECT_EQ(w1.examined, 3u);
}

TEST(Search, MatchesBruteForceOracle) {
  // Independent oracle: test every candidate directly with the checker.
  Field f = Field::prime(3);
  auto A = two_param_mod(3);
  for (const Scalar& w : {f.zero(), f.one(), f.from_int(2)}) {
    SearchResult res = enumerate_rb(A, w, {std::nullopt, 2});
    std::vector<Matrix> oracle;
    for (std::uint64_t i = 0; i < 81; ++i) {
      Matrix m = candidate_matrix(f, 2, i);
      if (check_rota_baxter(A, {m, w}).passed) oracle.push_back(m);
    }
    EXPECT_EQ(res.operators, oracle);
    EXPECT_EQ(res.found, res.reverified);
    EXPECT_EQ(res.examined, 81u);
  }
}

TEST(Search, KnownCounts) {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  EXPECT_EQ(enumerate_rb(two_param_mod(3), f3.zero()).operators.size(), 9u);
  EXPECT_EQ(enumerate_rb(two_param_mod(3), f3.one()).operators.size(), 14u);
  EXPECT_EQ(enumerate_rb(two_param_mod(5), f5.zero()).operators.size(), 25u);
  EXPECT_EQ(enumerate_rb(two_param_mod(5), f5.one()).operators.size(), 32u);
}

TEST(Search, WeightOneFamiliesAppearOverF5) {
  Field f = Field::prime(5);
  auto A = two_param_mod(5);
  auto ops = enumerate_rb(A, f.one()).operators;
  auto contains = [&](const Matrix& m) { return std::find(ops.begin(), ops.end(), m) != ops.end(); };
  for (const auto& fam : rb_families()) {
    if (fam.weight != 1) continue;
    for (long r = 0; r < 5; ++r) {
      for (long r1 = 0; r1 < 5; ++r1) {
        for (long r2 = 1; r2 < 5; ++r2) {
          std::map<std::string, Scalar> v{{"r", f.from_int(r)}, {"r1", f.from_int(r1)}, {"r2", f.from_int(r2)}};
          Matrix m = family_map(fam.id, f, v);
          EXPECT_TRUE(contains(m)) << fam.id << " " << m.to_string();
        }
      }
    }
  }
}

TEST(Search, CandidateOrderIsLittleEndianRowMajor) {
  Field f = Field::prime(3);
  Matrix m = candidate_matrix(f, 2, 1 + 2 * 3 + 1 * 27);
  EXPECT_EQ(m.at(0, 0).residue(), 1u);
  EXPECT_EQ(m.at(0, 1).residue(), 2u);
  EXPECT_EQ(m.at(1, 0).residue(), 0u);
  EXPECT_EQ(m.at(1, 1).residue(), 1u);
}

TEST(Search, JobsDoNotChangeResult) {
  Field f = Field::prime(5);
  auto A = two_param_mod(5);
  SearchResult one = enumerate_rb(A, f.one(), {std::nullopt, 1});
  SearchResult four = enumerate_rb(A, f.one(), {std::nullopt, 4});
  EXPECT_EQ(one.operators, four.operators);
}

TEST(Search, BudgetAndFieldErrors) {
  Field f = Field::prime(5);
  EXPECT_THROW(enumerate_rb(two_param_mod(5), f.zero(), {std::uint64_t{100}, 1}), BudgetExceeded);
  Field q = Field::rational();
  EXPECT_THROW(enumerate_rb(idempotent(q), q.zero()), InvalidField);
  ::setenv("RBALG_SEARCH_BUDGET", "10", 1);
  EXPECT_EQ(effective_budget({}), 10u);
  EXPECT_THROW(enumerate_rb(two_param_mod(5), f.zero()), BudgetExceeded);
  ::unsetenv("RBALG_SEARCH_BUDGET");
  EXPECT_EQ(effective_budget({}), kDefaultSearchBudget);
}

TEST(Search, BaxterSoundness) {
  Field f = Field::prime(3);
  auto A = two_param_mod(3);
  for (BaxterSide side : {BaxterSide::left, BaxterSide::right}) {
    SearchResult res = enumerate_baxter(A, side);
    EXPECT_EQ(res.found, res.reverified);
    for (const auto& m : res.operators) EXPECT_TRUE(check_one_sided_baxter(A, {m, side}).passed);
    std::size_t oracle = 0;
    for (std::uint64_t i = 0; i < 81; ++i) oracle += check_one_sided_baxter(A, {candidate_matrix(f, 2, i), side}).passed;
    EXPECT_EQ(res.operators.size(), oracle);
  }
}
