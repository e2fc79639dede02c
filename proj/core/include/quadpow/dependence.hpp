#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quadpow/forms.hpp"
#include "quadpow/linalg.hpp"

namespace quadpow {

enum class Side { Left, Right };

/// One summand lambda * f^d, displayed on the given side of the equality.
struct PowerTerm {
  Scalar lambda;
  BinaryForm form;
  Side side = Side::Left;

  /// Coefficient in the one-sided sum (negated for right-hand terms).
  Scalar signed_lambda() const { return side == Side::Left ? lambda : -lambda; }
};

/// Asserts sum_j signed_lambda_j * f_j^d = 0.
struct PowerIdentity {
  long d = 1;
  std::vector<PowerTerm> terms;

  FormSet forms() const;
  int form_degree() const;
  /// "lhs = rhs" rendering of the two-sided view.
  std::string to_string() const;
};

/// Builds a one-sided identity from coefficients and forms.
PowerIdentity make_identity(long d, const std::vector<Scalar>& lambdas, const FormSet& forms);

struct DependenceReport {
  std::size_t rank = 0;
  std::size_t r = 0;
  std::vector<std::vector<Scalar>> kernel;
  bool dependent() const { return !kernel.empty(); }
};

/// Coefficient matrix of {f_j^d}: rows are monomials, columns are forms.
Matrix<Scalar> power_matrix(const FormSet& forms, long d);
DependenceReport power_kernel(const FormSet& forms, long d);

BinaryForm residual(const PowerIdentity& id);

struct VerifyResult {
  bool pass = false;
  std::optional<BinaryForm> residual;
};
VerifyResult verify_identity(const PowerIdentity& id);

/// Moves the chosen terms (0-based) across the equality: lambda negated, side toggled.
PowerIdentity flip(const PowerIdentity& id, const std::vector<std::size_t>& move);

/// g_j = c_j (f_{pi(j)} o M), lambda'_j = lambda_{pi(j)} c_j^(-d).
PowerIdentity cousin_apply(const PowerIdentity& id, const std::vector<std::size_t>& pi, const std::vector<Scalar>& c,
                           const LinearChange& m);

struct PowerSum {
  long exponent = 0;
  bool zero = false;
  BinaryForm sum;
};
std::vector<PowerSum> power_sum_check(const FormSet& forms, const std::vector<long>& exps);

}  // namespace quadpow
