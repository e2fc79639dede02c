#pragma once

#include <random>

#include "quadpow/expr.hpp"
#include "quadpow/scalar.hpp"

namespace quadpow::testing {

inline Rational random_rational(std::mt19937_64& rng, long range, long max_den = 1) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long range, long max_den = 1) {
  for (;;) {
    Rational q = random_rational(rng, range, max_den);
    if (!is_zero(q)) return q;
  }
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, long level, long range = 5) {
  Cyclotomic acc;
  std::uniform_int_distribution<long> e(0, level - 1);
  for (int k = 0; k < 3; ++k) acc += Cyclotomic(random_rational(rng, range, 3)) * Cyclotomic::zeta(level, e(rng));
  return acc;
}

inline Scalar random_scalar(std::mt19937_64& rng, long range = 5) {
  static const long levels[] = {1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<int> pick(0, 5);
  return Scalar(random_cyclotomic(rng, levels[pick(rng)], range));
}

}  // namespace quadpow::testing
