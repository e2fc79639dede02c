#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quadpow/scalar.hpp"

namespace quadpow {

/// Parse tree of the scalar expression language:
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ('-'|'+') unary | factor
///   factor := base ('^' signed-integer)?
///   base   := integer | 'i' | 'omega' | 'phi' | 't' | 'zeta(' int ',' int ')'
///           | 'sqrt(' signed-rational ')' | 'root(' expr ')' | '(' expr ')'
/// 't' is only meaningful inside root(...).
struct ScalarExpr {
  enum class Kind { Number, Var, I, Omega, Phi, Zeta, Sqrt, Root, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  Rational number;  // Number, Sqrt argument
  long n = 0;       // Zeta level
  long k = 0;       // Zeta exponent, Pow exponent
  std::size_t pos = 0;
  std::vector<std::shared_ptr<const ScalarExpr>> args;
};

using ExprPtr = std::shared_ptr<const ScalarExpr>;

ExprPtr parse_expr(std::string_view text);
Scalar evaluate(const ExprPtr& e);
Scalar parse_scalar(std::string_view text);

}  // namespace quadpow
