#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace quadpow {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(long n, long k);
Integer factorial(long n);
Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// Trial-division factorization; fine for the magnitudes used here (< 1e14).
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

long euler_phi(long n);
std::vector<long> prime_divisors(long n);
long lcm_long(long a, long b);

}  // namespace quadpow
