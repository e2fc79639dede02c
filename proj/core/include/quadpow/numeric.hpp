#pragma once

#include <complex>
#include <string>
#include <vector>

#include "quadpow/scalar.hpp"

namespace quadpow {

struct ComplexApprox {
  std::string re;  // decimal strings at the requested precision
  std::string im;
  std::complex<double> value;
  double error_bound = 0;  // absolute, on both parts jointly
  long precision = 0;      // requested binary digits
  int root_index = 0;      // which root of the modulus was used
};

/// Complex embedding of a. When a carries a modulus, the root with the given
/// index is used; roots are ordered by real part descending, then imaginary
/// part descending. error_bound <= 2^(1-precision) * (1 + |value|).
ComplexApprox eval_complex(const Scalar& a, long precision = 128, int root_index = 0);

/// Double-precision shortcut.
std::complex<double> approx(const Scalar& a, int root_index = 0);

/// Complex roots of a modulus in the canonical order, at the given precision.
std::vector<std::complex<long double>> modulus_roots(const Modulus& m);

}  // namespace quadpow
