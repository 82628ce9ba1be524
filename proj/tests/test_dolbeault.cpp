#include <gtest/gtest.h>

#include "acplx/dolbeault.hpp"
#include "acplx/models.hpp"

using namespace acplx;

namespace {

const Scalar kI = Scalar::i();

ComplexForm random_complex(FormSampler& s, int degree) { return {s.form(degree), s.form(degree)}; }

ComplexForm lie_j(const AlmostComplex& ac, const ComplexForm& w) {
  return {lie_vform(ac.J, w.re()), lie_vform(ac.J, w.im())};
}

ComplexForm d_of(const ComplexForm& w) { return {ext_d(w.re()), ext_d(w.im())}; }

const Bigraded& iwasawa_bigraded() {
  static const Bigraded b(iwasawa());
  return b;
}

}  // namespace

TEST(Bigraded, RejectsUnsupportedModels) {
  try {
    Bigraded b(example27_torus(TrigPoly::sin_of(4, unit_mode(0))));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidWindow);
  }
  // nonintegrable constant J on a nilpotent algebra: J e1 = e3, J e2 = e4 on Heisenberg x R
  RawModel raw{"kt", 4, FrameKind::LieAlgebra, {{0, 1, 3, Rational(-1)}}};
  auto m = validate_model(raw);
  std::vector<std::vector<TrigPoly>> j(4, std::vector<TrigPoly>(4, m->zero()));
  j[2][0] = m->scalar(1);
  j[0][2] = m->scalar(-1);
  j[3][1] = m->scalar(1);
  j[1][3] = m->scalar(-1);
  auto ac = make_almost_complex(m, VectorForm::from_matrix(m, j));
  ASSERT_FALSE(ac.integrable());
  try {
    Bigraded b(ac);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIntegrable);
  }
}

TEST(Bigrade, CoframeSplitsIntoHolomorphicParts) {
  const auto& b = iwasawa_bigraded();
  auto m = b.model();
  auto parts = bigrade(b, ComplexForm(Form::coframe(m, 0)));
  Scalar half(make_rational(1, 2));
  ComplexForm expect10{Form::coframe(m, 0) * half, Form::coframe(m, 1) * half};
  ComplexForm expect01{Form::coframe(m, 0) * half, -(Form::coframe(m, 1) * half)};
  EXPECT_EQ(parts.at({1, 0}), expect10);
  EXPECT_EQ(parts.at({0, 1}), expect01);
}

TEST(Bigrade, FunctionsAreBidegreeZeroZero) {
  const auto& b = iwasawa_bigraded();
  auto parts = bigrade(b, ComplexForm(Form::function(b.model(), b.model()->scalar(3))));
  EXPECT_EQ(parts.size(), 1u);
  EXPECT_FALSE(parts.at({0, 0}).is_zero());
}

TEST(Bigrade, ComponentsSumAndConjugate) {
  const auto& b = iwasawa_bigraded();
  FormSampler s(b.model(), 61);
  for (int k = 0; k <= 6; ++k)
    for (int t = 0; t < 3; ++t) {
      ComplexForm w = random_complex(s, k);
      auto parts = bigrade(b, w);
      auto conj_parts = bigrade(b, w.conj());
      ComplexForm sum{Form(b.model(), k), Form(b.model(), k)};
      for (const auto& [pq, c] : parts) {
        sum = sum + c;
        EXPECT_EQ(c.conj(), conj_parts.at({pq.second, pq.first}));
      }
      EXPECT_EQ(sum, w);
    }
}

TEST(DelDelbar, LieJIsIDelMinusDelbar) {
  const auto& b = iwasawa_bigraded();
  const auto& ac = b.realization().structure();
  FormSampler s(b.model(), 62);
  for (int k = 0; k < 6; ++k)
    for (int t = 0; t < 4; ++t) {
      ComplexForm w = random_complex(s, k);
      auto [del, delbar] = del_delbar(b, w);
      EXPECT_EQ(lie_j(ac, w), kI * (del - delbar));
      EXPECT_EQ(del + delbar, d_of(w));
    }
}

TEST(DelDelbar, LieJDIsTwoIDelDelbar) {
  const auto& b = iwasawa_bigraded();
  const auto& ac = b.realization().structure();
  FormSampler s(b.model(), 63);
  for (int k = 0; k < 5; ++k)
    for (int t = 0; t < 4; ++t) {
      ComplexForm w = random_complex(s, k);
      ComplexForm dbar = del_delbar(b, w).second;
      ComplexForm ddbar = del_delbar(b, dbar).first;
      EXPECT_EQ(lie_j(ac, d_of(w)), Scalar(0, 2) * ddbar);
    }
}

TEST(DelDelbar, ConstantsAreClosed) {
  const auto& b = iwasawa_bigraded();
  auto [del, delbar] = del_delbar(b, ComplexForm(Form::function(b.model(), b.model()->scalar(5))));
  EXPECT_TRUE(del.is_zero());
  EXPECT_TRUE(delbar.is_zero());
}

TEST(Dolbeault, AbelianTorusDims) {
  Bigraded b(abelian(4));
  std::vector<std::size_t> expect{1, 4, 6, 4, 1};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(dolbeault_cohomology(b, k).dim, expect[k]);
  auto h1 = dolbeault_cohomology(b, 1).hodge;
  EXPECT_EQ(h1.at({1, 0}), 2u);
  EXPECT_EQ(h1.at({0, 1}), 2u);
}

TEST(Dolbeault, IwasawaHodgeNumbers) {
  const auto& b = iwasawa_bigraded();
  EXPECT_EQ(dolbeault_cohomology(b, 0).dim, 1u);
  auto h1 = dolbeault_cohomology(b, 1);
  EXPECT_EQ(h1.dim, 5u);
  EXPECT_EQ(h1.hodge.at({1, 0}), 3u);
  EXPECT_EQ(h1.hodge.at({0, 1}), 2u);
  auto h2 = dolbeault_cohomology(b, 2);
  EXPECT_EQ(h2.hodge.at({2, 0}), 3u);
  EXPECT_EQ(h2.hodge.at({1, 1}), 6u);
  EXPECT_EQ(h2.hodge.at({0, 2}), 2u);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(dolbeault_cohomology(b, k).dim, dolbeault_cohomology(b, 6 - k).dim);
}

TEST(Psi, AbelianIsBijective) {
  Bigraded b(abelian(4));
  for (int k = 0; k <= 4; ++k) {
    auto m = psi_map(b, k);
    EXPECT_TRUE(m.injective && m.surjective) << k;
  }
}

TEST(Psi, CrosscheckAgreesOnIwasawa) {
  const auto& b = iwasawa_bigraded();
  auto m0 = psi_map(b, 0);
  EXPECT_TRUE(m0.injective && m0.surjective);
  bool some_failure = false;
  for (const auto& row : psi_crosscheck(b)) {
    EXPECT_TRUE(row.agrees) << row.degree;
    some_failure = some_failure || row.ddbar_quotient != 0;
  }
  EXPECT_TRUE(some_failure);
}

TEST(Parity, SquareIsIdentityAndFixesZeroQ) {
  const auto& b = iwasawa_bigraded();
  FormSampler s(b.model(), 64);
  for (int k = 0; k <= 6; ++k) {
    ComplexForm w = random_complex(s, k);
    EXPECT_EQ(parity_twist(b, parity_twist(b, w)), w);
    ComplexForm zero_q = b.apply(b.pi(0, k), w, k);
    EXPECT_EQ(parity_twist(b, zero_q), zero_q);
  }
}

TEST(Parity, IntertwinesLieJAndD) {
  const auto& b = iwasawa_bigraded();
  const auto& ac = b.realization().structure();
  FormSampler s(b.model(), 65);
  for (int k = 0; k < 6; ++k) {
    EXPECT_TRUE(parity_intertwines(b, k));
    ComplexForm w = random_complex(s, k);
    ComplexForm lhs = lie_j(ac, parity_twist(b, w)) + kI * parity_twist(b, d_of(w));
    EXPECT_TRUE(lhs.is_zero());
  }
}

TEST(Parity, InterchangesSubspacesAndQuotientsAgree) {
  for (auto ac : {iwasawa(), kodaira_thurston(), abelian(4)}) {
    Bigraded b(ac);
    for (int k = 0; k <= b.n(); ++k) {
      EXPECT_TRUE(parity_interchanges(b, k)) << k;
      auto [left, right] = parity_quotients(b, k);
      EXPECT_EQ(left, right) << k;
    }
  }
}
