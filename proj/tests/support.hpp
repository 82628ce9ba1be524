#pragma once

// Shared helpers for the test binaries: seeded generators and floating-point
// oracles that do not go through the exact code paths.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "acplx/coeffring.hpp"

namespace testing_support {

using acplx::GaussianRational;
using acplx::Mode;
using acplx::Rational;
using acplx::TrigPoly;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double real(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53); }
  Rational rational(int span = 5, int max_den = 4) {
    return acplx::make_rational(uniform(-span, span), uniform(1, max_den));
  }
  GaussianRational gaussian() { return {rational(), rational()}; }

 private:
  std::mt19937_64 eng_;
};

inline Mode random_mode(Rng& rng, int dim, int bound) {
  Mode m;
  for (int a = 0; a < dim; ++a) m[a] = static_cast<std::int16_t>(rng.uniform(-bound, bound));
  return m;
}

/// Real trig polynomial with `count` conjugate pairs of modes bounded by `bound`.
inline TrigPoly random_real_trig(Rng& rng, int dim, int bound, int count) {
  std::vector<TrigPoly::Term> terms;
  for (int t = 0; t < count; ++t) {
    Mode m = random_mode(rng, dim, bound);
    GaussianRational c = rng.gaussian();
    if (m.is_zero()) c = GaussianRational(c.re());
    terms.emplace_back(m, c);
    if (!m.is_zero()) terms.emplace_back(-m, c.conj());
  }
  return TrigPoly::from_terms(dim, std::move(terms), true);
}

/// Complex (not necessarily real) trig polynomial.
inline TrigPoly random_trig(Rng& rng, int dim, int bound, int count) {
  std::vector<TrigPoly::Term> terms;
  for (int t = 0; t < count; ++t) terms.emplace_back(random_mode(rng, dim, bound), rng.gaussian());
  return TrigPoly::from_terms(dim, std::move(terms), false);
}

inline std::string random_linear(Rng& rng, int dim) {
  std::string s;
  int count = rng.uniform(1, 2);
  for (int t = 0; t < count; ++t) {
    int coef = rng.uniform(-3, 3);
    if (coef == 0) coef = 1;
    int axis = rng.uniform(1, dim);
    if (t == 0) {
      if (coef < 0) s += "-";
    } else {
      s += coef < 0 ? " - " : " + ";
    }
    if (std::abs(coef) != 1) s += std::to_string(std::abs(coef)) + "*";
    s += "x" + std::to_string(axis);
  }
  return s;
}

/// Random expression text in the parser grammar.
inline std::string random_expression(Rng& rng, int dim, int depth) {
  int pick = rng.uniform(0, depth <= 0 ? 2 : 6);
  switch (pick) {
    case 0: {
      int num = rng.uniform(0, 7), den = rng.uniform(1, 4);
      return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    case 1: return "sin(" + random_linear(rng, dim) + ")";
    case 2: return "cos(" + random_linear(rng, dim) + ")";
    case 3: return random_expression(rng, dim, depth - 1) + " + " + random_expression(rng, dim, depth - 1);
    case 4: return random_expression(rng, dim, depth - 1) + " - " + random_expression(rng, dim, depth - 1);
    case 5: return random_expression(rng, dim, depth - 1) + "*" + random_expression(rng, dim, depth - 1);
    default: return "-(" + random_expression(rng, dim, depth - 1) + ")";
  }
}

/// Numeric Nijenhuis tensor N(e_b, e_c)^a of a coordinate almost complex
/// structure given with analytic first derivatives: J(x)[a][b] and dJ(x, d)[a][b].
using Mat4 = std::array<std::array<double, 4>, 4>;

inline std::array<double, 4> numeric_nijenhuis(const std::function<Mat4(const double*)>& J,
                                               const std::function<Mat4(const double*, int)>& dJ, const double* x,
                                               int b, int c) {
  Mat4 j = J(x);
  std::array<Mat4, 4> dj;
  for (int d = 0; d < 4; ++d) dj[d] = dJ(x, d);
  // Vector fields X = e_b, Y = e_c, JX = J[.][b], JY = J[.][c] with derivatives.
  auto bracket = [&](const std::array<double, 4>& X, const std::array<std::array<double, 4>, 4>& dX,
                     const std::array<double, 4>& Y, const std::array<std::array<double, 4>, 4>& dY) {
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a)
      for (int d = 0; d < 4; ++d) out[a] += X[d] * dY[d][a] - Y[d] * dX[d][a];
    return out;
  };
  std::array<double, 4> eb{}, ec{};
  eb[b] = 1;
  ec[c] = 1;
  std::array<std::array<double, 4>, 4> zero{};
  std::array<double, 4> jb{}, jc{};
  std::array<std::array<double, 4>, 4> djb{}, djc{};  // djb[d][a] = d_d (J e_b)^a
  for (int a = 0; a < 4; ++a) {
    jb[a] = j[a][b];
    jc[a] = j[a][c];
    for (int d = 0; d < 4; ++d) {
      djb[d][a] = dj[d][a][b];
      djc[d][a] = dj[d][a][c];
    }
  }
  auto apply_j = [&](const std::array<double, 4>& v) {
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a)
      for (int e = 0; e < 4; ++e) out[a] += j[a][e] * v[e];
    return out;
  };
  auto t1 = bracket(eb, zero, ec, zero);
  auto t2 = apply_j(bracket(jb, djb, ec, zero));
  auto t3 = apply_j(bracket(eb, zero, jc, djc));
  auto t4 = bracket(jb, djb, jc, djc);
  std::array<double, 4> out{};
  for (int a = 0; a < 4; ++a) out[a] = t1[a] + t2[a] + t3[a] - t4[a];
  return out;
}

/// Rank of a dense double matrix by partial pivoting (tolerance 1e-9).
inline int numeric_rank(std::vector<std::vector<double>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    for (int i = r; i < rows; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (std::abs(m[piv][c]) < 1e-9) continue;
    std::swap(m[piv], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      double f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace testing_support
