#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadpow/dependence.hpp"

namespace quadpow {

/// Sparse polynomial over Q in three formal variables, by default
/// (lambda, alpha, beta). Terms are kept in a sorted map with no zero entries.
class MultiParamPoly {
 public:
  using Exponent = std::array<int, 3>;

  MultiParamPoly() = default;
  MultiParamPoly(const Rational& c);
  MultiParamPoly(long c) : MultiParamPoly(Rational(c)) {}

  static MultiParamPoly monomial(const Rational& c, const Exponent& e);
  /// v = 0, 1, 2 for the three variables.
  static MultiParamPoly var(int v, int power = 1);

  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  int degree(int v) const;
  Rational coeff(const Exponent& e) const;

  MultiParamPoly operator-() const;
  MultiParamPoly& operator+=(const MultiParamPoly& o);
  MultiParamPoly& operator-=(const MultiParamPoly& o);
  friend MultiParamPoly operator+(MultiParamPoly a, const MultiParamPoly& b) { return a += b; }
  friend MultiParamPoly operator-(MultiParamPoly a, const MultiParamPoly& b) { return a -= b; }
  friend MultiParamPoly operator*(const MultiParamPoly& a, const MultiParamPoly& b);
  friend bool operator==(const MultiParamPoly& a, const MultiParamPoly& b) { return a.t_ == b.t_; }
  MultiParamPoly scaled(const Rational& s) const;
  MultiParamPoly pow(unsigned e) const;

  /// Reduces exponents of variable v modulo n (the relation v^n = 1).
  MultiParamPoly reduce_power(int v, int n) const;
  MultiParamPoly substitute(const std::array<MultiParamPoly, 3>& values) const;
  /// Numerator of the substitution v -> num_v / den_v, cleared by den_v^deg_v.
  MultiParamPoly substitute_fraction(const std::array<MultiParamPoly, 3>& num,
                                     const std::array<MultiParamPoly, 3>& den) const;
  Scalar evaluate(const std::array<Scalar, 3>& values) const;
  /// Polynomial in variable v; throws if another variable occurs.
  QPoly univariate(int v) const;

  /// Writes the polynomial as var1^parity * q(var0, var1^2, var2); q uses the
  /// middle slot for the square. Throws if the parity of var1 is mixed.
  std::pair<int, MultiParamPoly> split_middle() const;

  std::string to_string(const std::array<std::string, 3>& names = {"lambda", "alpha", "beta"}) const;

 private:
  std::map<Exponent, Rational> t_;
};

// ---- tame case ---------------------------------------------------------

enum class TameBranchKind { EvenPower, SymmetricPair };
std::string to_string(TameBranchKind k);

struct TameMinor {
  std::array<int, 3> rows{};  // 0-based rows of the 2-Sylvester matrix
  QPoly poly;
};

struct TameCandidate {
  Scalar value;  // in the branch variable (b for EvenPower, b^2 for SymmetricPair)
  bool realized = false;
  /// First minor in search order that is nonzero at the candidate.
  std::optional<std::array<int, 3>> witness_rows;
  std::optional<Scalar> witness_value;
  std::optional<PowerIdentity> identity;
};

struct TameBranch {
  TameBranchKind kind = TameBranchKind::SymmetricPair;
  std::string variable;  // "b" or "b^2"
  std::vector<std::array<QPoly, 3>> matrix;
  std::vector<TameMinor> minors;  // search order: boundary rows first, then lexicographic
  std::size_t seed = 0;           // index of the minor whose roots give the candidates
  std::vector<Scalar> seed_roots;
  QPoly unresolved;  // factor of the seed with no extracted roots (1 when fully solved)
  std::vector<TameCandidate> candidates;
};

struct TameReport {
  long d = 0;
  std::vector<TameBranch> branches;
  std::size_t realized_count() const;
};

/// 2-Sylvester rows (x^2+bxy+y^2)^d + (x^2-bxy+y^2)^d in u = b^2.
std::vector<std::array<QPoly, 3>> tame_symmetric_matrix(long d);
/// (x^2+y^2)^d + b binom(d, d/2) (xy)^d, d even.
std::vector<std::array<QPoly, 3>> tame_even_matrix(long d);
QPoly minor3(const std::vector<std::array<QPoly, 3>>& m, const std::array<int, 3>& rows);

TameReport tame_analyze(long d);

// ---- wild case ---------------------------------------------------------

struct WildCoefficients {
  long d = 0;
  std::vector<MultiParamPoly> a;  // p_{lambda,alpha,beta} = sum a_i x^(2d-i) y^i
  std::vector<MultiParamPoly> b;  // (x^2+alpha xy+beta y^2)^d - (beta x^2+alpha xy+y^2)^d
};

/// Exact expansion with formal parameters, no relation on beta imposed.
WildCoefficients wild_coefficients(long d);

enum class BranchStatus { Solved, Contradiction };
std::string to_string(BranchStatus s);

struct WildBranch {
  std::string name;
  std::vector<std::string> relations;
  BranchStatus status = BranchStatus::Solved;
  /// Conditions checked to vanish under the relations.
  std::vector<std::string> satisfied;
  /// Factor in lambda left by a5 = 0 once lambda, 1 - lambda^2 are removed.
  std::optional<QPoly> lambda_condition;
  std::string next;  // branch this one reduces to, if any
  std::string witness_label;
  std::optional<Scalar> witness;
};

struct WildSolution {
  Scalar lambda, alpha, beta;
  BinaryForm f3, f4;  // p = f3^d + lambda f4^d
  BinaryForm p;
  PowerIdentity identity;  // p(x,y) - p(x,-y) = 0
  bool verified = false;
};

struct WildReport {
  long d = 0;
  std::vector<std::pair<std::string, MultiParamPoly>> conditions;
  std::vector<WildBranch> branches;
  std::vector<WildSolution> solutions;
};

WildReport wild_analyze(long d);

/// f3^d + f4^d with all six coefficients nonzero, scaled to
/// (x^2 + alpha1 xy + y^2)^d + lambda (x^2 + alpha xy + beta y^2)^d.
struct WildNormalization {
  Scalar u, v;  // x -> u x, y -> v y
  Scalar lambda, alpha1, alpha, beta;
  BinaryForm g3, g4;
};
WildNormalization wild_normalize(const BinaryForm& f3, const BinaryForm& f4, long d);

}  // namespace quadpow
