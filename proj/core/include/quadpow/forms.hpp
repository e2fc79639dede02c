#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadpow/form.hpp"

namespace quadpow {

using BinaryForm = BasicForm<Scalar>;
using FormSet = std::vector<BinaryForm>;
/// Forms whose coefficients are polynomials in a formal parameter.
using ParamForm = BasicForm<Poly<Scalar>>;

/// (x, y) -> (a x + b y, c x + d y)
struct LinearChange {
  Scalar a{1L}, b{0L}, c{0L}, d{1L};

  static LinearChange identity() { return {}; }
  Scalar det() const { return a * d - b * c; }
  bool invertible() const { return !det().zero(); }
  /// Matrix product; compose(compose(f, M), N) == compose(f, M * N).
  friend LinearChange operator*(const LinearChange& m, const LinearChange& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  LinearChange inverse() const;
  friend bool operator==(const LinearChange& m, const LinearChange& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

/// Quadratic a x^2 + b x y + c y^2.
BinaryForm quadratic(const Scalar& a, const Scalar& b, const Scalar& c);

BinaryForm form_power(const BinaryForm& f, long d, PowerMethod method = PowerMethod::Squaring);
BinaryForm compose(const BinaryForm& f, const LinearChange& m);

/// (1/m) sum_j zeta_m^(-r j) p(x, zeta_m^j y), evaluated literally.
BinaryForm synch(const BinaryForm& p, long m, long r);
/// Coefficients with index i = r mod m kept, the rest zeroed.
BinaryForm synch_filter(const BinaryForm& p, long m, long r);

/// (1/m) sum_j zeta_m^(-v j) (zeta_m^(-j) x^2 + alpha x y + zeta_m^j y^2)^d
BinaryForm psi(long v, long m, long d, const Scalar& alpha);
/// Same with alpha a formal parameter (coefficients are polynomials in alpha).
ParamForm psi_formal(long v, long m, long d);
/// Closed form for v = 0 when m > d or 2m > d >= m; nullopt otherwise.
std::optional<ParamForm> psi_closed_form(long m, long d);
/// Specialize a formal form at a value.
BinaryForm specialize(const ParamForm& f, const Scalar& alpha);

bool proportional(const BinaryForm& f, const BinaryForm& g);
bool is_even(const BinaryForm& f);

/// Monic gcd of two forms of any degrees (monic in the sense of the
/// dehomogenized gcd; y-powers carried along).
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

Scalar quad_resultant(const BinaryForm& f, const BinaryForm& g);

struct QuadGcd {
  int degree = 0;
  std::optional<BinaryForm> factor;
};
QuadGcd quad_gcd(const BinaryForm& f, const BinaryForm& g);

struct HonestyReport {
  bool honest = true;
  // 1-based indices of the first offending pair
  std::size_t first = 0;
  std::size_t second = 0;
};
HonestyReport honest(const FormSet& forms);

}  // namespace quadpow
