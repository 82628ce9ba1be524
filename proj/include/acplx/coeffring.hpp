#pragma once

// Exact coefficient rings: rationals (GMP), Gaussian rationals, and
// trigonometric polynomials on the n-torus stored in the exponential basis.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "acplx/errors.hpp"

namespace acplx {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit by design of the ring
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, Rational(-im_)}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
  }

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2", "-i", "1/2+3i", "(1/2-1/3i)" style rendering; parenthesised when
  /// both parts are nonzero and `wrap` is set.
  std::string to_string(bool wrap = false) const {
    if (is_real()) return re_.get_str();
    std::string im_part;
    if (im_ == 1) {
      im_part = "i";
    } else if (im_ == -1) {
      im_part = "-i";
    } else {
      im_part = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return im_part;
    std::string s = re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part;
    return wrap ? "(" + s + ")" : s;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Largest supported torus / frame dimension.
inline constexpr int kMaxDim = 16;

/// Fourier mode k in Z^n; unused trailing slots stay zero so that the
/// defaulted ordering is lexicographic mode order.
struct Mode {
  std::array<std::int16_t, kMaxDim> k{};

  std::int16_t& operator[](int axis) { return k[axis]; }
  std::int16_t operator[](int axis) const { return k[axis]; }

  friend auto operator<=>(const Mode&, const Mode&) = default;
  friend bool operator==(const Mode&, const Mode&) = default;

  Mode operator-() const {
    Mode m;
    for (int a = 0; a < kMaxDim; ++a) m.k[a] = static_cast<std::int16_t>(-k[a]);
    return m;
  }
  friend Mode operator+(const Mode& a, const Mode& b) {
    Mode m;
    for (int i = 0; i < kMaxDim; ++i) m.k[i] = static_cast<std::int16_t>(a.k[i] + b.k[i]);
    return m;
  }

  bool is_zero() const { return *this == Mode{}; }

  int sup_norm() const {
    int s = 0;
    for (auto v : k) s = std::max(s, std::abs(static_cast<int>(v)));
    return s;
  }

  /// First nonzero entry positive (the half-space used to fold conjugate pairs).
  bool is_positive() const {
    for (auto v : k) {
      if (v != 0) return v > 0;
    }
    return false;
  }

  std::string to_string(int dim) const {
    std::string s = "(";
    for (int a = 0; a < dim; ++a) s += (a ? "," : "") + std::to_string(k[a]);
    return s + ")";
  }
};

/// Finite Gaussian-rational Fourier sum  sum_k c_k exp(i k.x)  on the n-torus
/// with coordinates of period 2*pi.  Terms are kept sorted by mode with no
/// zero coefficients.  `is_real()` is a conservative flag: when set, the
/// conjugate-symmetry c_{-k} = conj(c_k) holds.
class TrigPoly {
 public:
  using Term = std::pair<Mode, GaussianRational>;

  TrigPoly() = default;
  explicit TrigPoly(int dim) : dim_(dim) { check_dim(dim); }

  static TrigPoly constant(int dim, const GaussianRational& c) {
    TrigPoly p(dim);
    if (!c.is_zero()) p.terms_.emplace_back(Mode{}, c);
    p.real_ = c.is_real();
    return p;
  }

  static TrigPoly exponential(int dim, const Mode& mode, const GaussianRational& c) {
    TrigPoly p(dim);
    p.check_mode(mode);
    if (!c.is_zero()) p.terms_.emplace_back(mode, c);
    p.real_ = mode.is_zero() && c.is_real();
    if (c.is_zero()) p.real_ = true;
    return p;
  }

  /// cos(k.x) = (e^{ikx} + e^{-ikx}) / 2
  static TrigPoly cos_of(int dim, const Mode& mode) {
    if (mode.is_zero()) return constant(dim, 1);
    std::vector<Term> t{{mode, make_rational(1, 2)}, {-mode, make_rational(1, 2)}};
    return from_terms(dim, std::move(t), true);
  }

  /// sin(k.x) = (e^{ikx} - e^{-ikx}) / 2i
  static TrigPoly sin_of(int dim, const Mode& mode) {
    if (mode.is_zero()) return TrigPoly(dim);
    GaussianRational half_i(Rational(0), make_rational(1, 2));
    std::vector<Term> t{{mode, -half_i}, {-mode, half_i}};
    return from_terms(dim, std::move(t), true);
  }

  /// Canonicalises arbitrary terms (sorts, merges, drops zeros).  With
  /// `real` set the conjugate symmetry is verified, not assumed.
  static TrigPoly from_terms(int dim, std::vector<Term> terms, bool real) {
    TrigPoly p(dim);
    for (const auto& t : terms) p.check_mode(t.first);
    p.terms_ = canonical(std::move(terms));
    p.real_ = false;
    if (real) {
      if (!p.conjugate_symmetric()) {
        throw Error(ErrorCode::BadParameter, "terms are not conjugate-symmetric");
      }
      p.real_ = true;
    }
    return p;
  }

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const { return real_ || terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero()); }

  GaussianRational coefficient(const Mode& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mode& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return {};
  }

  GaussianRational constant_term() const { return coefficient(Mode{}); }

  /// Checks the symmetry directly rather than trusting the flag.
  bool conjugate_symmetric() const {
    for (const auto& [m, c] : terms_) {
      if (coefficient(-m) != c.conj()) return false;
    }
    return true;
  }

  int max_mode_norm() const {
    int s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.sup_norm());
    return s;
  }

  bool depends_on(int axis) const {
    for (const auto& t : terms_) {
      if (t.first[axis] != 0) return true;
    }
    return false;
  }

  TrigPoly conj() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) t.emplace_back(-m, c.conj());
    TrigPoly p(dim_);
    p.terms_ = canonical(std::move(t));
    p.real_ = real_;
    return p;
  }

  TrigPoly operator-() const {
    TrigPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  TrigPoly& operator+=(const TrigPoly& o) {
    check_same(o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        GaussianRational c = a->second + b->second;
        if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    real_ = is_real() && o.is_real();
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& o) { return *this += -o; }

  TrigPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      real_ = true;
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    real_ = is_real() && s.is_real();
    return *this;
  }

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const GaussianRational& s) { return a *= s; }
  friend TrigPoly operator*(const GaussianRational& s, TrigPoly a) { return a *= s; }

  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    a.check_same(b);
    if (a.terms_.empty() || b.terms_.empty()) return TrigPoly(a.dim_);
    if (a.is_constant()) return b * a.terms_[0].second;
    if (b.is_constant()) return a * b.terms_[0].second;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma + mb, ca * cb);
    }
    TrigPoly p(a.dim_);
    p.terms_ = canonical(std::move(prod));
    p.real_ = a.is_real() && b.is_real();
    return p;
  }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }

  /// Semantic equality: the reality flag is bookkeeping, not value.
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

  TrigPoly partial(int axis) const {
    if (axis < 0 || axis >= dim_) {
      throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(axis) + " for dim " + std::to_string(dim_));
    }
    TrigPoly p(dim_);
    for (const auto& [m, c] : terms_) {
      if (m[axis] == 0) continue;
      p.terms_.emplace_back(m, c * GaussianRational(Rational(0), Rational(m[axis])));
    }
    p.real_ = is_real();
    return p;
  }

  std::complex<double> eval(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
    }
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : terms_) {
      double phase = 0.0;
      for (int a = 0; a < dim_; ++a) phase += m[a] * point[a];
      sum += c.to_complex() * std::polar(1.0, phase);
    }
    return sum;
  }

  /// Parser-compatible folded rendering for real polynomials, e.g.
  /// "1/2 + 3*cos(2*x1-x3) - 1/2*sin(x1)".  Non-real values fall back to an
  /// exponential rendering that the parser does not accept.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    if (!conjugate_symmetric()) return exponential_string();
    std::vector<std::pair<Rational, std::string>> parts;  // coefficient, function
    GaussianRational c0 = constant_term();
    if (!c0.is_zero()) parts.emplace_back(c0.re(), "");
    for (const auto& [m, c] : terms_) {
      if (!m.is_positive()) continue;
      std::string lin = linear_form(m);
      Rational cos_coef = 2 * c.re();
      Rational sin_coef = -2 * c.im();
      if (sgn(cos_coef) != 0) parts.emplace_back(cos_coef, "cos(" + lin + ")");
      if (sgn(sin_coef) != 0) parts.emplace_back(sin_coef, "sin(" + lin + ")");
    }
    std::string out;
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
      const auto& [coef, fn] = parts[idx];
      bool neg = sgn(coef) < 0;
      Rational mag = abs(coef);
      std::string body;
      if (fn.empty()) {
        body = mag.get_str();
      } else if (mag == 1) {
        body = fn;
      } else {
        body = mag.get_str() + "*" + fn;
      }
      if (idx == 0) {
        out += (neg ? "-" : "") + body;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
    return out;
  }

  std::string exponential_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
      const auto& [m, c] = terms_[idx];
      if (idx) out += " + ";
      out += c.to_string(true);
      if (!m.is_zero()) out += "*exp(i*(" + linear_form(m) + "))";
    }
    return out;
  }

  std::string linear_form(const Mode& m) const {
    std::string s;
    for (int a = 0; a < dim_; ++a) {
      int v = m[a];
      if (v == 0) continue;
      if (v < 0) {
        s += "-";
      } else if (!s.empty()) {
        s += "+";
      }
      if (std::abs(v) != 1) s += std::to_string(std::abs(v)) + "*";
      s += "x" + std::to_string(a + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static void check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) {
      throw Error(ErrorCode::DimensionMismatch, "torus dimension " + std::to_string(dim) + " unsupported");
    }
  }

  void check_mode(const Mode& m) const {
    for (int a = dim_; a < kMaxDim; ++a) {
      if (m[a] != 0) throw Error(ErrorCode::DimensionMismatch, "mode has entries beyond the torus dimension");
    }
  }

  void check_same(const TrigPoly& o) const {
    if (dim_ != o.dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "trig polynomial dims " + std::to_string(dim_) + " and " + std::to_string(o.dim_));
    }
  }

  static std::vector<Term> canonical(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }

  int dim_ = 0;
  std::vector<Term> terms_;
  bool real_ = true;
};

inline TrigPoly trig_mul(const TrigPoly& a, const TrigPoly& b) { return a * b; }
inline TrigPoly trig_partial(const TrigPoly& a, int axis) { return a.partial(axis); }
inline std::complex<double> trig_eval(const TrigPoly& a, std::span<const double> point) { return a.eval(point); }

inline Mode unit_mode(int axis, int multiple = 1) {
  Mode m;
  m[axis] = static_cast<std::int16_t>(multiple);
  return m;
}

}  // namespace acplx
