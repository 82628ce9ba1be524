#pragma once

// Expression syntax for real trigonometric polynomials:
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := rational | "sin" "(" lin ")" | "cos" "(" lin ")" | "(" expr ")" | "-" factor
//   lin    := signed integer combination of x1..xn
//   rational := int ("/" posint)?

#include <cctype>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "acplx/coeffring.hpp"

namespace acplx {

struct ExprAST {
  enum class Kind { Rational, Neg, Sum, Product, Sin, Cos };
  Kind kind = Kind::Rational;
  Rational value;           // Rational
  Mode lin;                 // Sin, Cos
  std::vector<ExprAST> children;

  /// Direct floating-point evaluation (independent of the TrigPoly expansion).
  double eval(std::span<const double> x) const {
    switch (kind) {
      case Kind::Rational: return value.get_d();
      case Kind::Neg: return -children[0].eval(x);
      case Kind::Sum: {
        double s = 0;
        for (const auto& c : children) s += c.eval(x);
        return s;
      }
      case Kind::Product: {
        double p = 1;
        for (const auto& c : children) p *= c.eval(x);
        return p;
      }
      case Kind::Sin:
      case Kind::Cos: {
        double arg = 0;
        for (std::size_t a = 0; a < x.size(); ++a) arg += lin[static_cast<int>(a)] * x[a];
        return kind == Kind::Sin ? std::sin(arg) : std::cos(arg);
      }
    }
    return 0;
  }

  TrigPoly to_trig(int dim) const {
    switch (kind) {
      case Kind::Rational: return TrigPoly::constant(dim, GaussianRational(value));
      case Kind::Neg: return -children[0].to_trig(dim);
      case Kind::Sum: {
        TrigPoly s(dim);
        for (const auto& c : children) s += c.to_trig(dim);
        return s;
      }
      case Kind::Product: {
        TrigPoly p = TrigPoly::constant(dim, 1);
        for (const auto& c : children) p *= c.to_trig(dim);
        return p;
      }
      case Kind::Sin: return lin.is_zero() ? TrigPoly(dim) : TrigPoly::sin_of(dim, lin);
      case Kind::Cos: return lin.is_zero() ? TrigPoly::constant(dim, 1) : TrigPoly::cos_of(dim, lin);
    }
    return TrigPoly(dim);
  }
};

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& text, int dim) : s_(text), dim_(dim) {}

  ExprAST parse() {
    ExprAST e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::Syntax) const {
    throw Error(code, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_word(const char* w) {
    skip();
    std::size_t n = std::char_traits<char>::length(w);
    return s_.compare(pos_, n, w) == 0;
  }

  ExprAST expr() {
    ExprAST sum{ExprAST::Kind::Sum};
    sum.children.push_back(term());
    while (true) {
      if (eat('+')) {
        sum.children.push_back(term());
      } else if (eat('-')) {
        ExprAST neg{ExprAST::Kind::Neg};
        neg.children.push_back(term());
        sum.children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    if (sum.children.size() == 1) return std::move(sum.children[0]);
    return sum;
  }

  ExprAST term() {
    ExprAST prod{ExprAST::Kind::Product};
    prod.children.push_back(factor());
    while (eat('*')) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  ExprAST factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      ExprAST neg{ExprAST::Kind::Neg};
      neg.children.push_back(factor());
      return neg;
    }
    if (c == '(') {
      ++pos_;
      ExprAST e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprAST lit{ExprAST::Kind::Rational};
      lit.value = Rational(digits());
      std::size_t save = pos_;
      if (eat('/')) {
        std::string den = digits();
        if (den.empty()) {
          pos_ = save;
          fail("expected a positive integer denominator");
        }
        Rational d(den);
        if (sgn(d) == 0) fail("zero denominator");
        lit.value /= d;
        lit.value.canonicalize();
      }
      return lit;
    }
    if (peek_word("sin") || peek_word("cos")) {
      bool is_sin = peek_word("sin");
      pos_ += 3;
      if (!eat('(')) fail("expected '(' after " + std::string(is_sin ? "sin" : "cos"));
      ExprAST t{is_sin ? ExprAST::Kind::Sin : ExprAST::Kind::Cos};
      t.lin = linear();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == 'x') fail("coordinates may only appear inside sin or cos");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  /// Coordinate index (0-based) after an 'x'.
  int coordinate() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected a coordinate x1..x" + std::to_string(dim_));
    ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
    std::string d = digits();
    if (d.empty()) fail("expected a coordinate index");
    long idx = std::stol(d);
    if (idx < 1 || idx > dim_)
      fail("unknown coordinate x" + d + " (dimension " + std::to_string(dim_) + ")", ErrorCode::UnknownCoordinate);
    return static_cast<int>(idx - 1);
  }

  Mode linear() {
    Mode m;
    long acc[kMaxDim] = {};
    bool first = true;
    while (true) {
      int sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      skip();
      Rational coef(1);
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = Rational(digits());
        if (eat('/')) {
          std::string den = digits();
          if (den.empty() || Rational(den) == 0) fail("bad denominator");
          coef /= Rational(den);
          coef.canonicalize();
        }
        if (!eat('*')) fail("constant offsets are not allowed inside sin/cos");
      }
      int axis = coordinate();
      if (eat('/')) {
        std::string den = digits();
        if (den.empty() || Rational(den) == 0) fail("bad denominator");
        coef /= Rational(den);
        coef.canonicalize();
      }
      if (coef.get_den() != 1) fail("frequency " + coef.get_str() + " is not an integer", ErrorCode::NonIntegerFrequency);
      acc[axis] += sign * coef.get_num().get_si();
    }
    for (int a = 0; a < dim_; ++a) {
      if (acc[a] > 1000 || acc[a] < -1000) fail("frequency too large");
      m[a] = static_cast<std::int16_t>(acc[a]);
    }
    return m;
  }

  std::string s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprAST parse_ast(const std::string& text, int dim) {
  if (dim < 1 || dim > kMaxDim) throw Error(ErrorCode::BadParameter, "dimension out of range");
  return detail::ExprParser(text, dim).parse();
}

inline TrigPoly parse_expr(const std::string& text, int dim) { return parse_ast(text, dim).to_trig(dim); }

}  // namespace acplx
