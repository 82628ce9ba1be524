#include <gtest/gtest.h>

#include "acplx/parser.hpp"
#include "support.hpp"

using namespace acplx;
using testing_support::Rng;

namespace {

ErrorCode code_of(const std::string& text, int dim = 4) {
  try {
    parse_expr(text, dim);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::AssemblyBug;
}

}  // namespace

TEST(Parser, Literals) {
  EXPECT_TRUE(parse_expr("0", 4).is_zero());
  EXPECT_EQ(parse_expr("3/6", 4), TrigPoly::constant(4, make_rational(1, 2)));
  EXPECT_EQ(parse_expr("-(2)", 4), TrigPoly::constant(4, -2));
}

TEST(Parser, ProductExpansion) {
  auto f = parse_expr("sin(x1)*cos(2*x3) + 1/2", 4);
  EXPECT_TRUE(f.is_real());
  EXPECT_EQ(parse_expr(f.to_string(), 4), f);
  Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(4);
    for (auto& v : x) v = rng.real(-4, 4);
    EXPECT_NEAR(trig_eval(f, x).real(), std::sin(x[0]) * std::cos(2 * x[2]) + 0.5, 1e-12);
  }
}

TEST(Parser, LinearForms) {
  Mode m = unit_mode(0, 2) + -unit_mode(2);
  EXPECT_EQ(parse_expr("cos(2*x1 - x3)", 4), TrigPoly::cos_of(4, m));
  EXPECT_EQ(parse_expr("sin(-x2)", 4), -TrigPoly::sin_of(4, unit_mode(1)));
  EXPECT_EQ(parse_expr("sin(x1 - x1)", 4), TrigPoly(4));
  EXPECT_EQ(parse_expr("cos(x1-x1)", 4), TrigPoly::constant(4, 1));
}

TEST(Parser, Errors) {
  EXPECT_EQ(code_of("sin(x1/2)"), ErrorCode::NonIntegerFrequency);
  EXPECT_EQ(code_of("sin(x5)"), ErrorCode::UnknownCoordinate);
  EXPECT_EQ(code_of("sin(x0)"), ErrorCode::UnknownCoordinate);
  EXPECT_EQ(code_of("x1"), ErrorCode::Syntax);
  EXPECT_EQ(code_of("sin(x1 + 1)"), ErrorCode::Syntax);
  EXPECT_EQ(code_of("1 +"), ErrorCode::Syntax);
  EXPECT_EQ(code_of("tan(x1)"), ErrorCode::Syntax);
  EXPECT_EQ(code_of("1/0"), ErrorCode::Syntax);
  EXPECT_EQ(code_of("(1"), ErrorCode::Syntax);
  try {
    parse_expr("1 + * 2", 4);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << e.what();
  }
}

TEST(Parser, RoundTripCorpus) {
  Rng rng(72);
  for (int t = 0; t < 200; ++t) {
    std::string text = testing_support::random_expression(rng, 4, 3);
    TrigPoly once = parse_expr(text, 4);
    ASSERT_TRUE(once.conjugate_symmetric()) << text;
    std::string printed = once.to_string();
    TrigPoly twice = parse_expr(printed, 4);
    EXPECT_EQ(twice, once) << text << " -> " << printed;
    EXPECT_EQ(twice.to_string(), printed);
  }
}

TEST(Parser, ExpansionAgreesWithDirectEvaluation) {
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    std::string text = testing_support::random_expression(rng, 4, 3);
    ExprAST ast = parse_ast(text, 4);
    TrigPoly p = ast.to_trig(4);
    for (int s = 0; s < 100; ++s) {
      std::vector<double> x(4);
      for (auto& v : x) v = rng.real(-7, 7);
      auto got = trig_eval(p, x);
      EXPECT_LT(std::abs(got.real() - ast.eval(x)), 1e-10) << text;
      EXPECT_LT(std::abs(got.imag()), 1e-10) << text;
    }
  }
}
