#include "quadpow/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace quadpow {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (is_zero(base)) throw std::domain_error("zero to a negative power");
    return rpow(Rational(1) / base, -exp);
  }
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)), ipow(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  if (n.fits_ulong_p()) {
    unsigned long m = n.get_ui();
    for (unsigned long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 0) out.emplace_back(Integer(p), e);
    }
    if (m > 1) out.emplace_back(Integer(m), 1);
    return out;
  }
  auto take = [&](const Integer& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (Integer p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace quadpow
