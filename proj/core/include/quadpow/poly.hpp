#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quadpow/errors.hpp"
#include "quadpow/rational.hpp"

namespace quadpow {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
/// R needs +, -, *, ==, R(long) and a free is_zero(const R&); division
/// routines additionally need R / R.
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(const R& c) {
    if (!is_zero(c)) c_.push_back(c);
  }
  Poly(long c) : Poly(R(c)) {}
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& c, std::size_t k) {
    if (is_zero(c)) return Poly();
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(R(1), 1); }

  const std::vector<R>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  void set_coeff(std::size_t i, const R& v) {
    if (i >= c_.size()) c_.resize(i + 1, R(0));
    c_[i] = v;
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const R& s) const {
    if (is_zero(s)) return Poly();
    std::vector<R> v = c_;
    for (auto& x : v) x = x * s;
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Substitute a polynomial for the variable.
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = R(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  Poly pow(unsigned long e) const {
    Poly result(1L), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Poly monic() const {
    if (zero()) return *this;
    R inv = R(1) / lead();
    return scaled(inv);
  }

  /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return i;
    return 0;
  }

  Poly shifted_down(std::size_t k) const {
    if (k >= c_.size()) return Poly();
    return Poly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.zero();
}

/// Euclidean division; b must be nonzero with invertible leading coefficient.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw DivisionByZero();
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<R>(), a};
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  R inv = R(1) / b.lead();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    R c = rem[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = slot - c * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(q)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).second;
}

/// Monic gcd over a field.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.zero()) {
    Poly<R> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
struct ExtGcd {
  Poly<R> g, s, t;
};

template <class R>
ExtGcd<R> ext_gcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b, s0(1L), s1, t0, t1(1L);
  while (!r1.zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<R> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) return {r0, s0, t0};
  R inv = R(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Squarefree part p / gcd(p, p'), made monic (characteristic zero).
template <class R>
Poly<R> squarefree_part(const Poly<R>& p) {
  if (p.degree() <= 0) return p.monic();
  Poly<R> g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

using QPoly = Poly<Rational>;

}  // namespace quadpow
