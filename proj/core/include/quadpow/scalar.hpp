#pragma once

#include <complex>
#include <memory>
#include <string>

#include "quadpow/cyclotomic.hpp"
#include "quadpow/poly.hpp"

namespace quadpow {

using CPoly = Poly<Cyclotomic>;

/// Monic squarefree polynomial m(t) over cyclotomic numbers; interned so
/// equal moduli share one instance.
class Modulus {
 public:
  static std::shared_ptr<const Modulus> intern(const CPoly& m);
  const CPoly& poly() const { return m_; }
  int degree() const { return m_.degree(); }
  /// Serialized body, e.g. "t^2 + 1/2".
  const std::string& text() const { return text_; }

  explicit Modulus(CPoly m);

 private:
  CPoly m_;
  std::string text_;
};

using ModulusPtr = std::shared_ptr<const Modulus>;

std::string cpoly_to_string(const CPoly& p, const std::string& var = "t");

/// Element of Q(zeta_N)[t]/(m(t)), or of Q(zeta_N) when no modulus is set.
class AlgebraicScalar {
 public:
  AlgebraicScalar() = default;
  AlgebraicScalar(long v) : v_(Cyclotomic(v)) {}
  AlgebraicScalar(const Rational& q) : v_(Cyclotomic(q)) {}
  AlgebraicScalar(const Cyclotomic& c) : v_(c) {}
  AlgebraicScalar(ModulusPtr mod, CPoly value);

  /// The class of t modulo the squarefree part of p.
  static AlgebraicScalar root_of(const CPoly& p);
  static AlgebraicScalar zeta(long n, long k = 1) { return AlgebraicScalar(Cyclotomic::zeta(n, k)); }

  const ModulusPtr& modulus() const { return mod_; }
  const CPoly& value() const { return v_; }
  bool zero() const { return v_.zero(); }
  /// Constant (t-free) value, if any.
  bool is_cyclotomic() const { return v_.degree() <= 0; }
  Cyclotomic cyclotomic_value() const;
  bool is_rational() const;
  Rational rational_value() const;

  AlgebraicScalar operator-() const;
  friend AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator/(const AlgebraicScalar& a, const AlgebraicScalar& b);
  AlgebraicScalar& operator+=(const AlgebraicScalar& o) { return *this = *this + o; }
  AlgebraicScalar& operator-=(const AlgebraicScalar& o) { return *this = *this - o; }
  AlgebraicScalar& operator*=(const AlgebraicScalar& o) { return *this = *this * o; }
  AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this = *this / o; }
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend bool operator!=(const AlgebraicScalar& a, const AlgebraicScalar& b) { return !(a == b); }

  AlgebraicScalar inverse() const;
  AlgebraicScalar pow(long e) const;

  /// Canonical grammar string; parse_scalar(to_string()) == *this.
  std::string to_string() const;

 private:
  ModulusPtr mod_;
  CPoly v_;
};

using Scalar = AlgebraicScalar;

inline bool is_zero(const Scalar& s) { return s.zero(); }

/// Shared modulus of two operands; throws IncompatibleModulus on mismatch.
ModulusPtr common_modulus(const ModulusPtr& a, const ModulusPtr& b);

/// s with s^2 = r; branch: positive real part, else positive imaginary part.
Scalar sqrt_rational(const Rational& r);

/// Square root of a scalar: rational and monomial cyclotomic values stay
/// cyclotomic, anything else adjoins t^2 - a as a new modulus.
Scalar sqrt_scalar(const Scalar& a);

/// Largest phi(level) used by sqrt_rational before it adjoins t^2 - n instead.
inline constexpr long kSqrtMaxDegree = 128;

}  // namespace quadpow
