#include <gtest/gtest.h>

#include "acplx/modelspec.hpp"
#include "acplx/models.hpp"

using namespace acplx;

namespace {

std::string model_path(const std::string& file) { return std::string(ACPLX_SOURCE_DIR) + "/models/" + file; }

bool squares_to_minus_one(const AlmostComplex& ac) { return is_almost_complex(ac.J); }

}  // namespace

TEST(Catalog, EveryEntryBuildsWithDefaults) {
  for (const auto& e : model_catalog()) {
    auto ac = builtin(e.name);
    EXPECT_TRUE(squares_to_minus_one(ac)) << e.name;
    EXPECT_EQ(canonical_model_name(e.name), e.name);
    for (const auto& a : e.aliases) EXPECT_EQ(canonical_model_name(a), e.name);
  }
  EXPECT_EQ(canonical_model_name("nope"), "");
  EXPECT_THROW(builtin("nope"), Error);
}

TEST(Catalog, OnlyKodairaThurstonIsMarkedExtra) {
  for (const auto& e : model_catalog()) EXPECT_EQ(e.from_literature, e.name != "kodaira_thurston") << e.name;
}

TEST(Builtin, ParametersAreChecked) {
  BuiltinParams bad;
  bad.functions["q"] = TrigPoly(4);
  EXPECT_THROW(builtin("example27", bad), Error);
  BuiltinParams dep;
  dep.functions["p"] = TrigPoly::cos_of(4, unit_mode(2));
  try {
    builtin("example27", dep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParameter);
  }
  BuiltinParams odd;
  odd.n = 5;
  EXPECT_THROW(builtin("abelian", odd), Error);
  BuiltinParams six;
  six.n = 6;
  EXPECT_EQ(builtin("flat_kahler_torus", six).model->dim(), 6);
}

TEST(Builtin, IntegrabilityOfTheExamples) {
  EXPECT_TRUE(example27_torus(TrigPoly(4)).integrable());
  auto t4 = t4_nonstandard(TrigPoly::sin_of(4, unit_mode(0)), TrigPoly(4));
  EXPECT_FALSE(t4.integrable());
  EXPECT_TRUE(iwasawa().N.is_zero());
  EXPECT_THROW(abelian(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, Rational(0)))), Error);
}

TEST(Spec, LoadsTorusAndLieFiles) {
  auto t = load_model_spec(model_path("example27_sin.json"));
  EXPECT_TRUE(t.structure.model->is_torus());
  EXPECT_EQ(t.windows, (std::vector<int>{1, 2, 3}));
  auto ref = example27_torus(TrigPoly::sin_of(4, unit_mode(0)));
  EXPECT_EQ(t.structure.J.matrix(), ref.J.matrix());

  auto kt = load_model_spec(model_path("kodaira_thurston.json"));
  auto builtin_kt = kodaira_thurston();
  EXPECT_EQ(kt.structure.model->constants().size(), builtin_kt.model->constants().size());
  EXPECT_EQ(kt.structure.J.matrix(), builtin_kt.J.matrix());
  EXPECT_TRUE(kt.structure.integrable());
}

TEST(Spec, BrokenJacobiNamesEveryTriple) {
  try {
    load_model_spec(model_path("broken.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::JacobiViolation);
    EXPECT_TRUE(is_input_error(e.code()));
    std::string all;
    for (const auto& d : e.details()) all += d + "\n";
    for (const char* triple : {"(e1, e2, e4)", "(e1, e3, e4)", "(e2, e3, e4)"})
      EXPECT_NE(all.find(triple), std::string::npos) << triple;
  }
}

TEST(Spec, RejectsMalformedInput) {
  auto code = [](const nlohmann::json& j) {
    try {
      model_spec_from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::AssemblyBug;
  };
  using nlohmann::json;
  auto matrix = [](const char* a, const char* b, const char* c, const char* d) {
    return json::array({json::array({a, b}), json::array({c, d})});
  };
  json base = {{"name", "x"}, {"kind", "torus"}, {"dim", 2}, {"J", matrix("0", "-1", "1", "0")}};
  EXPECT_NO_THROW(model_spec_from_json(base));
  auto missing = base;
  missing.erase("J");
  EXPECT_EQ(code(missing), ErrorCode::InvalidSpec);
  auto kind = base;
  kind["kind"] = "sphere";
  EXPECT_EQ(code(kind), ErrorCode::InvalidSpec);
  auto rows = base;
  rows["J"] = json::array({json::array({"0", "-1"})});
  EXPECT_EQ(code(rows), ErrorCode::DimensionMismatch);
  auto notj = base;
  notj["J"] = matrix("1", "0", "0", "1");
  EXPECT_EQ(code(notj), ErrorCode::NotAlmostComplex);
  auto freq = base;
  freq["J"] = matrix("0", "sin(x1/2)", "1", "0");
  EXPECT_EQ(code(freq), ErrorCode::NonIntegerFrequency);
  auto win = base;
  win["windows"] = json::array({1, -2});
  EXPECT_EQ(code(win), ErrorCode::InvalidSpec);
  auto type = base;
  type["dim"] = "two";
  EXPECT_EQ(code(type), ErrorCode::InvalidSpec);
}
