#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quadpow/poly.hpp"
#include "quadpow/rational.hpp"

namespace quadpow {

/// Element of Q(zeta_N) stored as integer numerators over a positive common
/// denominator, in the power basis zeta_N^0 .. zeta_N^{phi(N)-1}.
/// Values are always canonical: primitive numerators and the minimal level
/// (never congruent to 2 mod 4).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);
  Cyclotomic(const Rational& q);
  Cyclotomic(const Integer& z) : Cyclotomic(Rational(z)) {}

  static Cyclotomic zeta(long n, long k = 1);
  /// Build from rational coordinates at level n (length phi(n)).
  static Cyclotomic from_coords(long n, const std::vector<Rational>& coords);

  long level() const { return level_; }
  std::size_t dim() const { return num_.size(); }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coord(std::size_t e) const;

  bool zero() const;
  bool is_rational() const { return level_ == 1; }
  Rational rational_value() const;
  /// q * zeta_N^e for a single nonzero term, as (q, N, e).
  struct Monomial {
    Rational q;
    long n;
    long e;
  };
  std::optional<Monomial> as_monomial() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  Cyclotomic conj() const;
  /// Image under zeta_N -> zeta_N^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const;

  std::string to_string() const;
  std::complex<double> approx() const;

  /// Numerators of this value re-expressed at level L (a multiple of level()),
  /// over the same denominator.
  std::vector<Integer> lifted_numerators(long L) const;

 private:
  Cyclotomic(long level, std::vector<Integer> num, Integer den);
  void normalize();
  bool try_reduce_square(long p);
  bool try_reduce_simple(long p);

  long level_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

inline bool is_zero(const Cyclotomic& c) { return c.zero(); }

/// Integer coefficients of the n-th cyclotomic polynomial, low to high.
const std::vector<long>& cyclotomic_poly(long n);

QPoly to_qpoly(const Cyclotomic& c);

}  // namespace quadpow
