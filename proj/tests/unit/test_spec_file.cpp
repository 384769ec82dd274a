#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "rbalg/spec_file.hpp"
#include "test_util.hpp"

using namespace rbalg;
using namespace rbalg::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(SpecFile, MinimalDocument) {
  AlgebraSpec s = parse_spec(R"({"field": {"kind": "rational"}, "kind": "assoc", "dim": 1,
    "operations": {"mu": [[["7/2"]]]}, "alpha": [["1"]], "beta": [["1"]]})");
  EXPECT_EQ(s.dim, 1u);
  EXPECT_EQ(s.as_assoc().mu.at(0, 0, 0).rational(), mpq_class(7, 2));
  EXPECT_THROW(s.as_dend(), KindMismatch);
}

TEST(SpecFile, IntegersAcceptedFloatsRejected) {
  EXPECT_NO_THROW(parse_spec(R"({"field": {"kind": "prime", "p": 3}, "kind": "assoc", "dim": 1,
    "operations": {"mu": [[[2]]]}, "alpha": [[1]], "beta": [[1]]})"));
  EXPECT_THROW(parse_spec(R"({"field": {"kind": "rational"}, "kind": "assoc", "dim": 1,
    "operations": {"mu": [[[0.5]]]}, "alpha": [["1"]], "beta": [["1"]]})"),
               ParseError);
}

TEST(SpecFile, SymbolicFixturePasses) {
  AlgebraSpec s = read_spec_file(fixture("two_param_symbolic.json"));
  EXPECT_EQ(s.field.kind(), FieldSpec::Kind::rational_function);
  EXPECT_TRUE(check_bihom_associative(s.as_assoc()).passed);
}

TEST(SpecFile, RoundTripOnFixtures) {
  for (const char* name : {"two_param_symbolic.json", "two_param_a2b3.json", "two_param_a2b3_f5.json",
                           "broken_dend.json", "idempotent_f3.json", "graded_pair.json"}) {
    AlgebraSpec s = read_spec_file(fixture(name));
    AlgebraSpec back = parse_spec(serialize_spec(s));
    EXPECT_TRUE(back == s) << name;
    EXPECT_EQ(serialize_spec(back), serialize_spec(s)) << name;
  }
}

TEST(SpecFile, RoundTripOnRandomStructures) {
  Rng rng(81);
  for (const Field& f : {Field::prime(5), Field::rational()}) {
    for (int i = 0; i < 20; ++i) {
      TwistInstance t = random_twist_instance(f, rng);
      for (const AlgebraSpec& s : {AlgebraSpec::from(t.assoc), AlgebraSpec::from(t.dend), AlgebraSpec::from(t.tridend),
                                   AlgebraSpec::from(t.quadri)}) {
        EXPECT_TRUE(parse_spec(serialize_spec(s)) == s);
      }
    }
  }
}

TEST(SpecFile, OptionalBlocks) {
  AlgebraSpec s = read_spec_file(fixture("graded_pair.json"));
  ASSERT_EQ(s.rota_baxter.size(), 2u);
  ASSERT_TRUE(s.baxter && s.baxter->right && s.baxter->left);
  ASSERT_TRUE(s.bimodule && s.bimodule->grb);
  EXPECT_TRUE(check_bimodule(s.as_assoc(), s.bimodule->module).passed);
  s.twistors.push_back({Matrix::identity(s.field, 9), Matrix::identity(s.field, 27), std::nullopt, std::nullopt,
                        Matrix::identity(s.field, 3), Matrix::identity(s.field, 3)});
  s.twist = TwistBlock{Matrix::identity(s.field, 3), Matrix::identity(s.field, 3)};
  AlgebraSpec back = parse_spec(serialize_spec(s));
  EXPECT_TRUE(back == s);
  EXPECT_TRUE(check_weak_pseudotwistor(back.as_assoc(), back.weak_twistor(0)).passed);
}

TEST(SpecFile, SyntaxErrorsCarryPosition) {
  std::string text = slurp(fixture("two_param_a2b3.json"));
  try {
    parse_spec(text.substr(0, text.size() / 2));
    FAIL() << "truncated document parsed";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0u);
  }
}

TEST(SpecFile, ShapeErrorsCarryPath) {
  try {
    parse_spec(R"({"field": {"kind": "rational"}, "kind": "assoc", "dim": 2,
      "operations": {"mu": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0"]]]},
      "alpha": [["1", "0"], ["0", "1"]], "beta": [["1", "0"], ["0", "1"]]})");
    FAIL() << "bad shape parsed";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("operations.mu[1][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_spec(R"({"field": {"kind": "prime", "p": 4}, "kind": "assoc", "dim": 1,
    "operations": {"mu": [[["1"]]]}, "alpha": [["1"]], "beta": [["1"]]})"),
               ParseError);
  EXPECT_THROW(parse_spec(R"({"field": {"kind": "rational"}, "kind": "lie", "dim": 1,
    "operations": {"mu": [[["1"]]]}, "alpha": [["1"]], "beta": [["1"]]})"),
               ParseError);
}

TEST(SpecFile, FreeElementRoundTrip) {
  FreeElement x = parse_free_element(slurp(fixture("element_generator.json")));
  EXPECT_EQ(x.terms().size(), 2u);
  EXPECT_EQ(parse_free_element(serialize_free_element(x)), x);
}

TEST(SpecFile, WriteAndRead) {
  auto path = std::filesystem::temp_directory_path() / "rbalg_spec_roundtrip.json";
  AlgebraSpec s = read_spec_file(fixture("two_param_a2b3.json"));
  write_spec_file(path.string(), s);
  EXPECT_TRUE(read_spec_file(path.string()) == s);
  std::filesystem::remove(path);
  EXPECT_THROW(read_spec_file("/nonexistent/rbalg.json"), Error);
}
