#include <gtest/gtest.h>

#include "acplx/models.hpp"
#include "support.hpp"

using namespace acplx;
using testing_support::Rng;

namespace {

ModelPtr torus4() { return validate_model({"t", 4, FrameKind::CoordinateTorus, {}}); }

TrigPoly sin_ax(int axis) { return TrigPoly::sin_of(4, unit_mode(axis)); }
TrigPoly cos_ax(int axis) { return TrigPoly::cos_of(4, unit_mode(axis)); }

Form random_form(Rng& rng, const ModelPtr& m, int degree) {
  Form out(m, degree);
  auto idx = multi_indices(m->dim(), degree);
  if (idx.empty()) return out;
  int count = rng.uniform(1, 3);
  for (int t = 0; t < count; ++t) {
    TrigPoly c = m->is_torus() ? testing_support::random_real_trig(rng, m->dim(), 1, 2) : m->scalar(rng.rational());
    out.add(idx[rng.uniform(0, static_cast<int>(idx.size()) - 1)], c);
  }
  return out;
}

VectorField random_field(Rng& rng, const ModelPtr& m) {
  VectorField v(m);
  for (int j = 0; j < m->dim(); ++j)
    v[j] = m->is_torus() ? testing_support::random_real_trig(rng, m->dim(), 1, 2) : m->scalar(rng.rational());
  return v;
}

}  // namespace

TEST(MultiIndex, Enumeration) {
  EXPECT_EQ(multi_indices(6, 2).size(), 15u);
  EXPECT_EQ(multi_indices(4, 0).size(), 1u);
  EXPECT_EQ(multi_indices(4, 5).size(), 0u);
  auto w = wedge_monomials(MultiIndex::of({1}), MultiIndex::of({0}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, -1);
  EXPECT_FALSE(wedge_monomials(MultiIndex::of({1}), MultiIndex::of({1, 2})));
}

TEST(Wedge, WorkedExample) {
  auto m = torus4();
  Form a = Form::basis(m, MultiIndex::of({0}), sin_ax(0)) + Form::coframe(m, 1);
  Form b = Form::basis(m, MultiIndex::of({2}), cos_ax(0));
  Form expect = Form::basis(m, MultiIndex::of({0, 2}), sin_ax(0) * cos_ax(0)) + Form::basis(m, MultiIndex::of({1, 2}), cos_ax(0));
  EXPECT_EQ(wedge(a, b), expect);
}

TEST(Wedge, GradedCommutativityAndAssociativity) {
  Rng rng(11);
  auto m = torus4();
  for (int t = 0; t < 40; ++t) {
    int p = rng.uniform(0, 4), q = rng.uniform(0, 4 - p), r = rng.uniform(0, 4 - p - q);
    Form a = random_form(rng, m, p), b = random_form(rng, m, q), c = random_form(rng, m, r);
    Form ba = wedge(b, a);
    EXPECT_EQ(wedge(a, b), (p * q) % 2 ? -ba : ba);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(ExteriorDerivative, WorkedExampleAndSquareZero) {
  auto m = torus4();
  EXPECT_EQ(ext_d(Form::basis(m, MultiIndex::of({1}), sin_ax(0))), Form::basis(m, MultiIndex::of({0, 1}), cos_ax(0)));
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    Form a = random_form(rng, m, rng.uniform(0, 3));
    EXPECT_TRUE(ext_d(ext_d(a)).is_zero());
  }
  auto iw = iwasawa().model;
  for (int t = 0; t < 40; ++t) {
    Form a = random_form(rng, iw, rng.uniform(0, 5));
    EXPECT_TRUE(ext_d(ext_d(a)).is_zero());
  }
}

TEST(ExteriorDerivative, LeibnizRule) {
  Rng rng(13);
  for (const auto& m : {torus4(), iwasawa().model}) {
    for (int t = 0; t < 30; ++t) {
      int p = rng.uniform(0, 2), q = rng.uniform(0, 2);
      Form a = random_form(rng, m, p), b = random_form(rng, m, q);
      Form rhs = wedge(ext_d(a), b);
      Form tail = wedge(a, ext_d(b));
      EXPECT_EQ(ext_d(wedge(a, b)), p % 2 ? rhs - tail : rhs + tail);
    }
  }
}

TEST(Interior, WorkedExamples) {
  auto m = torus4();
  Form e12 = Form::basis(m, MultiIndex::of({0, 1}), m->scalar(1));
  EXPECT_EQ(interior_frame(0, e12), Form::coframe(m, 1));
  EXPECT_EQ(interior_frame(1, e12), -Form::coframe(m, 0));
  VectorField x(m);
  x[0] = cos_ax(1);
  x[2] = m->scalar(1);
  Form e13 = Form::basis(m, MultiIndex::of({0, 2}), m->scalar(1));
  Form expect = Form::basis(m, MultiIndex::of({2}), cos_ax(1)) - Form::coframe(m, 0);
  EXPECT_EQ(interior_vector(x, e13), expect);
}

TEST(Interior, AntiderivationAndNilpotent) {
  Rng rng(14);
  auto m = torus4();
  for (int t = 0; t < 30; ++t) {
    int p = rng.uniform(1, 2), q = rng.uniform(0, 2);
    Form a = random_form(rng, m, p), b = random_form(rng, m, q);
    VectorField x = random_field(rng, m);
    Form rhs = wedge(interior_vector(x, a), b);
    Form tail = wedge(a, interior_vector(x, b));
    EXPECT_EQ(interior_vector(x, wedge(a, b)), p % 2 ? rhs - tail : rhs + tail);
    EXPECT_TRUE(interior_vector(x, interior_vector(x, wedge(a, b))).is_zero());
  }
}

TEST(Bracket, WorkedExample) {
  auto m = torus4();
  VectorField x(m), y = VectorField::frame(m, 1);
  x[0] = sin_ax(1);
  VectorField expect(m);
  expect[0] = -cos_ax(1);
  EXPECT_EQ(vf_bracket(x, y), expect);
}

TEST(Bracket, AntisymmetryAndJacobi) {
  Rng rng(15);
  for (const auto& m : {torus4(), iwasawa().model}) {
    for (int t = 0; t < 15; ++t) {
      VectorField x = random_field(rng, m), y = random_field(rng, m), z = random_field(rng, m);
      EXPECT_TRUE((vf_bracket(x, y) + vf_bracket(y, x)).is_zero());
      VectorField jac = vf_bracket(x, vf_bracket(y, z)) + vf_bracket(y, vf_bracket(z, x)) + vf_bracket(z, vf_bracket(x, y));
      EXPECT_TRUE(jac.is_zero());
    }
  }
}

TEST(LieModel, DifferentialIsDualToBracket) {
  auto m = iwasawa().model;
  int n = m->dim();
  for (int k = 0; k < n; ++k) {
    Form de = ext_d(Form::coframe(m, k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        VectorField br = vf_bracket(VectorField::frame(m, i), VectorField::frame(m, j));
        if (i == j) {
          EXPECT_TRUE(br.is_zero());
          continue;
        }
        EXPECT_EQ(de.on_frame({i, j}), -br[k]);
      }
  }
}

TEST(LieModel, IwasawaCoframeDifferentials) {
  auto m = iwasawa().model;
  auto one = m->scalar(1);
  Form de5 = -(Form::basis(m, MultiIndex::of({0, 2}), one) - Form::basis(m, MultiIndex::of({1, 3}), one));
  Form de6 = -(Form::basis(m, MultiIndex::of({0, 3}), one) + Form::basis(m, MultiIndex::of({1, 2}), one));
  EXPECT_EQ(ext_d(Form::coframe(m, 4)), de5);
  EXPECT_EQ(ext_d(Form::coframe(m, 5)), de6);
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(ext_d(Form::coframe(m, k)).is_zero());
}

TEST(Validation, CollectsEveryViolation) {
  RawModel odd{"odd", 3, FrameKind::LieAlgebra, {}};
  try {
    validate_model(odd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddDimension);
  }

  RawModel jac{"bad", 4, FrameKind::LieAlgebra, {}};
  jac.constants = {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {2, 0, 1, Rational(1)}, {0, 3, 0, Rational(1)}};
  try {
    validate_model(jac);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::JacobiViolation);
    EXPECT_GE(e.details().size(), 3u);
  }

  RawModel anti{"anti", 4, FrameKind::LieAlgebra, {{0, 1, 2, Rational(1)}, {1, 0, 2, Rational(1)}}};
  EXPECT_THROW(
      {
        try {
          validate_model(anti);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::Antisymmetry);
          throw;
        }
      },
      Error);

  RawModel mixed{"mixed", 4, FrameKind::CoordinateTorus, {{0, 1, 3, Rational(1)}}};
  EXPECT_THROW(
      {
        try {
          validate_model(mixed);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::MixedRing);
          throw;
        }
      },
      Error);
}

TEST(Forms, MixingModelsIsRejected) {
  auto a = torus4(), b = torus4();
  EXPECT_THROW(Form::coframe(a, 0) + Form::coframe(b, 0), Error);
  EXPECT_THROW(Form::coframe(a, 0) + Form::basis(a, MultiIndex::of({0, 1}), a->scalar(1)), Error);
}
