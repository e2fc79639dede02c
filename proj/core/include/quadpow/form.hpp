#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "quadpow/errors.hpp"
#include "quadpow/poly.hpp"
#include "quadpow/scalar.hpp"

namespace quadpow {

/// Per-ring hooks used by the generic form algorithms.
template <class S>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational from_scalar(const Scalar& s) { return s.rational_value(); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool try_inverse(const Rational& a, Rational& out) {
    if (is_zero(a)) return false;
    out = 1 / a;
    return true;
  }
  static std::string to_string(const Rational& a) { return quadpow::to_string(a); }
};

template <>
struct RingTraits<Scalar> {
  static Scalar from_scalar(const Scalar& s) { return s; }
  static Scalar from_rational(const Rational& q) { return Scalar(q); }
  /// Cheap inverses only: nonzero values without t-dependence.
  static bool try_inverse(const Scalar& a, Scalar& out) {
    if (a.zero() || !a.is_cyclotomic()) return false;
    out = a.inverse();
    return true;
  }
  static std::string to_string(const Scalar& a) { return a.to_string(); }
};

template <class R>
struct RingTraits<Poly<R>> {
  static Poly<R> from_scalar(const Scalar& s) { return Poly<R>(RingTraits<R>::from_scalar(s)); }
  static Poly<R> from_rational(const Rational& q) { return Poly<R>(RingTraits<R>::from_rational(q)); }
  static bool try_inverse(const Poly<R>& a, Poly<R>& out) {
    if (a.degree() != 0) return false;
    R inv(0L);
    if (!RingTraits<R>::try_inverse(a.lead(), inv)) return false;
    out = Poly<R>(inv);
    return true;
  }
  static std::string to_string(const Poly<R>& a) {
    if (a.zero()) return "0";
    std::string out;
    for (int k = a.degree(); k >= 0; --k) {
      const R& c = a.coeffs()[static_cast<std::size_t>(k)];
      if (is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      out += "(" + RingTraits<R>::to_string(c) + ")";
      if (k >= 1) out += "*a";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }
};

enum class PowerMethod { Auto, Squaring, Miller };

/// Binary form of fixed degree k; coefficient i multiplies x^(k-i) y^i.
template <class S>
class BasicForm {
 public:
  BasicForm() : BasicForm(0) {}
  explicit BasicForm(int degree) : k_(degree), c_(static_cast<std::size_t>(degree + 1), S(0L)) {
    if (degree < 0) throw PreconditionError("form degree must be non-negative");
  }
  explicit BasicForm(std::vector<S> coeffs) : k_(static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {
    if (c_.empty()) throw PreconditionError("form needs at least one coefficient");
  }
  /// c * x^(k-i) y^i
  static BasicForm monomial(const S& c, int k, int i) {
    BasicForm f(k);
    f.c_[static_cast<std::size_t>(i)] = c;
    return f;
  }
  /// a x + b y
  static BasicForm linear(const S& a, const S& b) { return BasicForm(std::vector<S>{a, b}); }

  int degree() const { return k_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  S& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }
  bool zero() const {
    for (const auto& x : c_)
      if (!is_zero(x)) return false;
    return true;
  }

  BasicForm operator-() const {
    BasicForm r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  BasicForm& operator+=(const BasicForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    require_same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator*(const BasicForm& a, const BasicForm& b) {
    BasicForm r(a.k_ + b.k_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (is_zero(b.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  BasicForm scaled(const S& s) const {
    BasicForm r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    if (a.k_ != b.k_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const BasicForm& a, const BasicForm& b) { return !(a == b); }

  /// f(x, y) -> f(y, x)
  BasicForm swapped() const {
    BasicForm r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    return r;
  }
  /// f(x, c y): coefficient i scaled by c^i.
  BasicForm scale_y(const S& c) const {
    BasicForm r = *this;
    S p(1L);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i] = r.c_[i] * p;
      p = p * c;
    }
    return r;
  }

  BasicForm pow_squaring(long d) const {
    if (d < 0) throw PreconditionError("negative form power");
    BasicForm result = BasicForm::monomial(S(1L), 0, 0), base = *this;
    while (d) {
      if (d & 1) result = result * base;
      d >>= 1;
      if (d) base = base * base;
    }
    return result;
  }

  /// Power via the J.C.P. Miller recurrence; needs an inverse of coeff(0).
  BasicForm pow_miller(long d, const S& inv_c0) const {
    const std::size_t n = static_cast<std::size_t>(k_) * static_cast<std::size_t>(d);
    BasicForm g(static_cast<int>(n));
    S c0pow(1L);
    for (long e = 0; e < d; ++e) c0pow = c0pow * c_[0];
    g.c_[0] = c0pow;
    for (std::size_t m = 1; m <= n; ++m) {
      S acc(0L);
      const std::size_t top = std::min<std::size_t>(m, static_cast<std::size_t>(k_));
      for (std::size_t j = 1; j <= top; ++j) {
        if (is_zero(c_[j]) || is_zero(g.c_[m - j])) continue;
        const long w = (d + 1) * static_cast<long>(j) - static_cast<long>(m);
        if (w == 0) continue;
        acc = acc + RingTraits<S>::from_rational(Rational(w)) * c_[j] * g.c_[m - j];
      }
      if (is_zero(acc)) continue;
      Rational inv_m(1, static_cast<unsigned long>(m));
      g.c_[m] = acc * inv_c0 * RingTraits<S>::from_rational(inv_m);
    }
    return g;
  }

  BasicForm pow(long d, PowerMethod method = PowerMethod::Auto) const {
    if (d < 0) throw PreconditionError("negative form power");
    if (d == 0) return BasicForm::monomial(S(1L), 0, 0);
    if (method == PowerMethod::Squaring || k_ == 0) return pow_squaring(d);
    S inv(0L);
    if (RingTraits<S>::try_inverse(c_[0], inv)) return pow_miller(d, inv);
    if (RingTraits<S>::try_inverse(c_.back(), inv)) return swapped().pow_miller(d, inv).swapped();
    if (method == PowerMethod::Miller) throw PreconditionError("Miller recurrence needs an invertible end coefficient");
    return pow_squaring(d);
  }

  /// f(a x + b y, c x + d y)
  BasicForm compose(const S& a, const S& b, const S& c, const S& d) const {
    std::vector<BasicForm> p1{BasicForm::monomial(S(1L), 0, 0)}, p2{BasicForm::monomial(S(1L), 0, 0)};
    const BasicForm l1 = linear(a, b), l2 = linear(c, d);
    for (int e = 1; e <= k_; ++e) {
      p1.push_back(p1.back() * l1);
      p2.push_back(p2.back() * l2);
    }
    BasicForm r(k_);
    for (int i = 0; i <= k_; ++i) {
      if (is_zero(c_[static_cast<std::size_t>(i)])) continue;
      r += (p1[static_cast<std::size_t>(k_ - i)] * p2[static_cast<std::size_t>(i)]).scaled(c_[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  /// Dehomogenization f(t, 1), coefficient of t^(k-i) is coeff(i).
  Poly<S> dehomogenize() const {
    std::vector<S> v(c_.rbegin(), c_.rend());
    return Poly<S>(std::move(v));
  }
  /// Homogenize p(t) to degree n: t^j -> x^j y^(n-j).
  static BasicForm homogenize(const Poly<S>& p, int n) {
    if (p.degree() > n) throw PreconditionError("homogenization degree too small");
    BasicForm f(n);
    for (int j = 0; j <= p.degree(); ++j) f.c_[static_cast<std::size_t>(n - j)] = p.coeffs()[static_cast<std::size_t>(j)];
    return f;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i <= k_; ++i) {
      const S& c = c_[static_cast<std::size_t>(i)];
      if (is_zero(c)) continue;
      std::string mono;
      const int ex = k_ - i, ey = i;
      if (ex > 0) mono += ex == 1 ? "x" : "x^" + std::to_string(ex);
      if (ey > 0) mono += std::string(mono.empty() ? "" : "*") + (ey == 1 ? "y" : "y^" + std::to_string(ey));
      if (!out.empty()) out += " + ";
      std::string cs = RingTraits<S>::to_string(c);
      if (mono.empty())
        out += "(" + cs + ")";
      else if (cs == "1")
        out += mono;
      else
        out += "(" + cs + ")*" + mono;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_degree(const BasicForm& o) const {
    if (o.k_ != k_) throw PreconditionError("forms have different degrees");
  }

  int k_;
  std::vector<S> c_;
};

}  // namespace quadpow
