#include <numeric>

#include "quadpow/errors.hpp"
#include "quadpow/scalar.hpp"

namespace quadpow {
namespace {

struct SquareSplit {
  Integer square_root;  // s
  Integer core;         // squarefree k with n = s^2 k
};

SquareSplit split_square(const Integer& n) {
  SquareSplit out{1, sgn(n) < 0 ? -1 : 1};
  for (const auto& [p, e] : factor_integer(n)) {
    out.square_root *= ipow(p, static_cast<unsigned long>(e / 2));
    if (e % 2) out.core *= p;
  }
  return out;
}

long legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p;
  long e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * base) % p);
    base = static_cast<long>((static_cast<__int128>(base) * base) % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

/// g with g^2 = (-1)^((p-1)/2) p.
Cyclotomic gauss_sum(long p) {
  std::vector<Rational> coords(static_cast<std::size_t>(p - 1), Rational(0));
  // In the basis zeta^0..zeta^{p-2}, zeta^{p-1} = -(1 + ... + zeta^{p-2}).
  const long last = legendre(p - 1, p);
  for (long k = 1; k <= p - 2; ++k) coords[static_cast<std::size_t>(k)] = legendre(k, p) - last;
  coords[0] = -last;
  return Cyclotomic::from_coords(p, coords);
}

Cyclotomic sqrt_prime(long p) {
  if (p == 2) return Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
  Cyclotomic g = gauss_sum(p);
  if (p % 4 == 1) return g;
  return -Cyclotomic::zeta(4, 1) * g;
}

long required_level(const Integer& core) {
  long level = sgn(core) < 0 ? 4 : 1;
  for (const auto& [p, e] : factor_integer(core)) {
    if (!p.fits_slong_p()) return -1;
    const long pl = p.get_si();
    long need = pl == 2 ? 8 : (pl % 4 == 1 ? pl : 4 * pl);
    level = std::lcm(level, need);
    if (euler_phi(level) > kSqrtMaxDegree) return -1;
  }
  return level;
}

Cyclotomic branch_fix(const Cyclotomic& s) {
  Cyclotomic re2 = s + s.conj();
  const auto z = s.approx();
  if (!re2.zero()) return z.real() < 0 ? -s : s;
  return z.imag() < 0 ? -s : s;
}

}  // namespace

Scalar sqrt_rational(const Rational& r) {
  if (is_zero(r)) return Scalar(0L);
  const Integer nd = r.get_num() * r.get_den();
  SquareSplit sp = split_square(nd);
  Rational scale(sp.square_root, r.get_den());
  scale.canonicalize();
  if (sp.core == 1) return Scalar(scale);
  const long level = required_level(sp.core);
  if (level < 0) {
    CPoly m(std::vector<Cyclotomic>{Cyclotomic(Rational(-sp.core)), Cyclotomic(0L), Cyclotomic(1L)});
    return Scalar(scale) * Scalar::root_of(m);
  }
  Cyclotomic acc(scale);
  if (sgn(sp.core) < 0) acc *= Cyclotomic::zeta(4, 1);
  for (const auto& [p, e] : factor_integer(sp.core)) acc *= sqrt_prime(p.get_si());
  return Scalar(branch_fix(acc));
}

Scalar sqrt_scalar(const Scalar& a) {
  if (a.zero()) return Scalar(0L);
  if (a.is_cyclotomic()) {
    const Cyclotomic c = a.cyclotomic_value();
    if (c.is_rational()) return sqrt_rational(c.rational_value());
    if (auto mono = c.as_monomial()) {
      Scalar root = sqrt_rational(mono->q);
      Scalar s = root * Scalar::zeta(2 * mono->n, mono->e);
      if (s.is_cyclotomic()) return Scalar(branch_fix(s.cyclotomic_value()));
      return s;
    }
  }
  if (a.modulus()) throw PreconditionError("square root would need a second adjoined root");
  CPoly m(std::vector<Cyclotomic>{-a.cyclotomic_value(), Cyclotomic(0L), Cyclotomic(1L)});
  return Scalar::root_of(m);
}

}  // namespace quadpow
