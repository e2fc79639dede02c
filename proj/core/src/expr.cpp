#include "quadpow/expr.hpp"

#include <cctype>

#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

using Kind = ScalarExpr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ExprPtr node(Kind k, std::size_t pos, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<ScalarExpr>();
    e->kind = k;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip();
      const std::size_t pos = i_;
      if (accept('+'))
        lhs = node(Kind::Add, pos, {lhs, term()});
      else if (accept('-'))
        lhs = node(Kind::Sub, pos, {lhs, term()});
      else
        return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip();
      const std::size_t pos = i_;
      if (accept('*'))
        lhs = node(Kind::Mul, pos, {lhs, unary()});
      else if (accept('/'))
        lhs = node(Kind::Div, pos, {lhs, unary()});
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    skip();
    const std::size_t pos = i_;
    if (accept('-')) return node(Kind::Neg, pos, {unary()});
    if (accept('+')) return unary();
    return factor();
  }

  ExprPtr factor() {
    ExprPtr b = base();
    skip();
    const std::size_t pos = i_;
    if (accept('^')) {
      auto e = std::make_shared<ScalarExpr>();
      e->kind = Kind::Pow;
      e->pos = pos;
      e->k = signed_integer().get_si();
      e->args = {b};
      return e;
    }
    return b;
  }

  Integer integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    if (i_ - start > 4000) fail("integer literal too long");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  Integer signed_integer() {
    skip();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Integer v = integer();
    if (!v.fits_slong_p()) fail("integer out of range");
    return neg ? Integer(-v) : v;
  }

  std::string word() {
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  ExprPtr base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t pos = i_;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = std::make_shared<ScalarExpr>();
      e->kind = Kind::Number;
      e->pos = pos;
      e->number = Rational(integer());
      return e;
    }
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");
    const std::string w = word();
    if (w == "i") return node(Kind::I, pos);
    if (w == "omega") return node(Kind::Omega, pos);
    if (w == "phi") return node(Kind::Phi, pos);
    if (w == "t") return node(Kind::Var, pos);
    if (w == "zeta") {
      expect('(');
      const std::size_t npos = i_;
      Integer n = signed_integer();
      expect(',');
      Integer k = signed_integer();
      expect(')');
      if (n < 1) throw ParseError(npos, "zeta level must be at least 1");
      if (n > 100000) throw ParseError(npos, "zeta level too large");
      auto e = std::make_shared<ScalarExpr>();
      e->kind = Kind::Zeta;
      e->pos = pos;
      e->n = n.get_si();
      e->k = k.get_si();
      return e;
    }
    if (w == "sqrt") {
      expect('(');
      Integer num = signed_integer();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t dpos = i_;
        den = integer();
        if (den == 0) throw ParseError(dpos, "zero denominator");
      }
      expect(')');
      auto e = std::make_shared<ScalarExpr>();
      e->kind = Kind::Sqrt;
      e->pos = pos;
      e->number = Rational(num, den);
      e->number.canonicalize();
      return e;
    }
    if (w == "root") {
      expect('(');
      ExprPtr body = expr();
      expect(')');
      return node(Kind::Root, pos, {body});
    }
    i_ = pos;
    fail("unknown identifier '" + w + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Cyclotomic golden_ratio() {
  Scalar r5 = sqrt_rational(5);
  return (Cyclotomic(1L) + r5.cyclotomic_value()) * Cyclotomic(Rational(1, 2));
}

CPoly eval_poly(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Number:
      return CPoly(Cyclotomic(e->number));
    case Kind::Var:
      return CPoly::var();
    case Kind::I:
      return CPoly(Cyclotomic::zeta(4, 1));
    case Kind::Omega:
      return CPoly(Cyclotomic::zeta(3, 1));
    case Kind::Phi:
      return CPoly(golden_ratio());
    case Kind::Zeta:
      return CPoly(Cyclotomic::zeta(e->n, e->k));
    case Kind::Sqrt: {
      if (is_zero(e->number)) return CPoly();
      Scalar s = sqrt_rational(e->number);
      if (!s.is_cyclotomic() || s.modulus()) throw ParseError(e->pos, "square root too large for use inside root()");
      return CPoly(s.cyclotomic_value());
    }
    case Kind::Root:
      throw ParseError(e->pos, "nested root()");
    case Kind::Add:
      return eval_poly(e->args[0]) + eval_poly(e->args[1]);
    case Kind::Sub:
      return eval_poly(e->args[0]) - eval_poly(e->args[1]);
    case Kind::Mul:
      return eval_poly(e->args[0]) * eval_poly(e->args[1]);
    case Kind::Div: {
      CPoly d = eval_poly(e->args[1]);
      if (d.zero()) throw ParseError(e->pos, "division by zero");
      if (d.degree() > 0) throw ParseError(e->pos, "division by a polynomial in t");
      return eval_poly(e->args[0]).scaled(d.coeff(0).inverse());
    }
    case Kind::Neg:
      return -eval_poly(e->args[0]);
    case Kind::Pow: {
      CPoly b = eval_poly(e->args[0]);
      if (e->k >= 0) return b.pow(static_cast<unsigned long>(e->k));
      if (b.degree() != 0) throw ParseError(e->pos, "negative power of a polynomial in t");
      return CPoly(b.coeff(0).pow(e->k));
    }
  }
  throw ParseError(e->pos, "bad expression");
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

Scalar evaluate(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::Number:
      return Scalar(e->number);
    case Kind::Var:
      throw ParseError(e->pos, "variable t outside root()");
    case Kind::I:
      return Scalar::zeta(4, 1);
    case Kind::Omega:
      return Scalar::zeta(3, 1);
    case Kind::Phi:
      return Scalar(golden_ratio());
    case Kind::Zeta:
      return Scalar::zeta(e->n, e->k);
    case Kind::Sqrt:
      return sqrt_rational(e->number);
    case Kind::Root: {
      CPoly p = eval_poly(e->args[0]);
      if (p.degree() < 1) throw ParseError(e->pos, "root() of a constant polynomial");
      return Scalar::root_of(p);
    }
    case Kind::Add:
      return evaluate(e->args[0]) + evaluate(e->args[1]);
    case Kind::Sub:
      return evaluate(e->args[0]) - evaluate(e->args[1]);
    case Kind::Mul:
      return evaluate(e->args[0]) * evaluate(e->args[1]);
    case Kind::Div: {
      Scalar d = evaluate(e->args[1]);
      if (d.zero()) throw ParseError(e->pos, "division by zero");
      return evaluate(e->args[0]) / d;
    }
    case Kind::Neg:
      return -evaluate(e->args[0]);
    case Kind::Pow: {
      Scalar b = evaluate(e->args[0]);
      if (e->k < 0 && b.zero()) throw ParseError(e->pos, "division by zero");
      return b.pow(e->k);
    }
  }
  throw ParseError(e->pos, "bad expression");
}

Scalar parse_scalar(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace quadpow
