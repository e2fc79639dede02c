#include "quadpow/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

Cx cx_add(const Cx& a, const Cx& b) {
  Cx r(a.re.prec());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_sub(const Cx& a, const Cx& b) {
  Cx r(a.re.prec());
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_mul(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = a.re.prec();
  Cx r(p);
  Real t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

Real cx_abs(const Cx& a) {
  Real r(a.re.prec());
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return r;
}

Cx cx_div(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = a.re.prec();
  Real den(p), t(p);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  Cx conj(p);
  mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  Cx r = cx_mul(a, conj);
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

/// Value of a cyclotomic number and an absolute error bound.
struct Eval {
  Cx v;
  double err;
};

Eval eval_cyclotomic(const Cyclotomic& c, mpfr_prec_t p) {
  Cx acc(p);
  double mag = 0;
  Real pi2(p), ang(p), s(p), co(p), q(p);
  mpfr_const_pi(pi2.get(), MPFR_RNDN);
  mpfr_mul_ui(pi2.get(), pi2.get(), 2, MPFR_RNDN);
  for (std::size_t e = 0; e < c.dim(); ++e) {
    if (sgn(c.numerators()[e]) == 0) continue;
    Rational qe = c.coord(e);
    mpfr_set_q(q.get(), qe.get_mpq_t(), MPFR_RNDN);
    mag += std::fabs(qe.get_d());
    if (e == 0) {
      mpfr_add(acc.re.get(), acc.re.get(), q.get(), MPFR_RNDN);
      continue;
    }
    mpfr_mul_ui(ang.get(), pi2.get(), static_cast<unsigned long>(e), MPFR_RNDN);
    mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(c.level()), MPFR_RNDN);
    mpfr_sin_cos(s.get(), co.get(), ang.get(), MPFR_RNDN);
    mpfr_mul(co.get(), co.get(), q.get(), MPFR_RNDN);
    mpfr_mul(s.get(), s.get(), q.get(), MPFR_RNDN);
    mpfr_add(acc.re.get(), acc.re.get(), co.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), acc.im.get(), s.get(), MPFR_RNDN);
  }
  const double eps = std::ldexp(1.0, -static_cast<int>(p));
  return {acc, (mag + 1e-300) * (static_cast<double>(c.dim()) + 8.0) * eps};
}

/// p(z) and p'(z) by Horner for a polynomial with approximate coefficients.
std::pair<Cx, Cx> horner(const std::vector<Cx>& coeffs, const Cx& z) {
  const mpfr_prec_t p = z.re.prec();
  Cx v(p), dv(p);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    dv = cx_add(cx_mul(dv, z), v);
    v = cx_add(cx_mul(v, z), coeffs[k]);
  }
  return {v, dv};
}

std::vector<std::complex<long double>> initial_roots(const std::vector<std::complex<long double>>& c) {
  const std::size_t n = c.size() - 1;
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c[n]));
  radius = 1 + radius;
  std::vector<std::complex<long double>> z(n);
  const std::complex<long double> seed(0.4L, 0.9L);
  std::complex<long double> w = 1;
  for (std::size_t k = 0; k < n; ++k) {
    w *= seed;
    z[k] = radius * w / std::abs(w) * (0.5L + 0.5L * static_cast<long double>(k + 1) / static_cast<long double>(n));
  }
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> num = 0;
      for (std::size_t k = c.size(); k-- > 0;) num = num * z[i] + c[k];
      std::complex<long double> den = c[n];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      std::complex<long double> step = num / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L * radius) break;
  }
  return z;
}

bool root_order(const std::complex<long double>& a, const std::complex<long double>& b) {
  const long double tol = 1e-9L * (1 + std::abs(a) + std::abs(b));
  if (std::fabs(a.real() - b.real()) > tol) return a.real() > b.real();
  return a.imag() > b.imag();
}

struct RootEval {
  Cx z;
  double radius;  // inclusion radius around z containing the exact root
};

RootEval refine_root(const Modulus& m, int root_index, mpfr_prec_t p) {
  const auto& mc = m.poly().coeffs();
  std::vector<Cx> coeffs;
  std::vector<double> cerr;
  std::vector<std::complex<long double>> approx_c;
  for (const auto& c : mc) {
    Eval e = eval_cyclotomic(c, p);
    approx_c.emplace_back(e.v.re.ld(), e.v.im.ld());
    coeffs.push_back(e.v);
    cerr.push_back(e.err);
  }
  auto start = initial_roots(approx_c);
  std::sort(start.begin(), start.end(), root_order);
  if (root_index < 0 || static_cast<std::size_t>(root_index) >= start.size())
    throw PreconditionError("root index out of range");
  Cx z(p);
  mpfr_set_ld(z.re.get(), start[static_cast<std::size_t>(root_index)].real(), MPFR_RNDN);
  mpfr_set_ld(z.im.get(), start[static_cast<std::size_t>(root_index)].imag(), MPFR_RNDN);
  for (int it = 0; it < 200; ++it) {
    auto [v, dv] = horner(coeffs, z);
    Cx step = cx_div(v, dv);
    z = cx_sub(z, step);
    Real sa = cx_abs(step), za = cx_abs(z);
    if (mpfr_zero_p(sa.get())) break;
    const long gap = mpfr_get_exp(za.get()) - mpfr_get_exp(sa.get());
    if (gap > static_cast<long>(p) + 4) break;
  }
  auto [v, dv] = horner(coeffs, z);
  const double az = cx_abs(z).d();
  double perr = 0, derr = 0;
  double zp = 1;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double ck = cx_abs(coeffs[k]).d();
    perr += (cerr[k] + ck * std::ldexp(1.0, -static_cast<int>(p) + 4)) * zp;
    if (k > 0) derr += static_cast<double>(k) * (cerr[k] + ck * std::ldexp(1.0, -static_cast<int>(p) + 4)) * zp / (az + 1e-300);
    zp *= (az + 1);
  }
  const double pv = cx_abs(v).d() + perr;
  const double pd = std::max(cx_abs(dv).d() - derr, 1e-300);
  return {z, static_cast<double>(mc.size() - 1) * pv / pd};
}

Eval eval_at(const Scalar& a, mpfr_prec_t p, int root_index) {
  if (!a.modulus() || a.value().degree() <= 0) return eval_cyclotomic(a.value().coeff(0), p);
  RootEval re = refine_root(*a.modulus(), root_index, p);
  const double az = cx_abs(re.z).d();
  Cx acc(p);
  double err = 0;
  const auto& vc = a.value().coeffs();
  for (std::size_t k = vc.size(); k-- > 0;) {
    Eval ck = eval_cyclotomic(vc[k], p);
    acc = cx_add(cx_mul(acc, re.z), ck.v);
    const double mk = cx_abs(ck.v).d();
    const double kk = static_cast<double>(k);
    err += ck.err * std::pow(az + re.radius, kk) + mk * (std::pow(az + re.radius, kk) - std::pow(az, kk));
    err += (mk + 1e-300) * std::pow(az + 1, kk) * (kk + 2) * std::ldexp(1.0, -static_cast<int>(p) + 1);
  }
  return {acc, err};
}

std::string to_decimal(const Real& r, long precision) {
  const long digits = std::max(10L, static_cast<long>(static_cast<double>(precision) * 0.30103) + 1);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), r.get());
  return std::string(buf.data());
}

}  // namespace

ComplexApprox eval_complex(const Scalar& a, long precision, int root_index) {
  if (precision < 8) precision = 8;
  mpfr_prec_t w = static_cast<mpfr_prec_t>(precision + 64);
  for (int attempt = 0; attempt < 12; ++attempt, w *= 2) {
    Eval e = eval_at(a, w, root_index);
    const double mag = cx_abs(e.v).d();
    const double target = std::ldexp(1.0 + mag, 1 - static_cast<int>(precision));
    if (e.err <= target || attempt == 11) {
      ComplexApprox out;
      out.re = to_decimal(e.v.re, precision);
      out.im = to_decimal(e.v.im, precision);
      out.value = {e.v.re.d(), e.v.im.d()};
      out.error_bound = e.err;
      out.precision = precision;
      out.root_index = a.modulus() && a.value().degree() > 0 ? root_index : 0;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::complex<double> approx(const Scalar& a, int root_index) {
  if (!a.modulus() || a.value().degree() <= 0) return a.value().coeff(0).approx();
  return eval_complex(a, 64, root_index).value;
}

std::vector<std::complex<long double>> modulus_roots(const Modulus& m) {
  std::vector<std::complex<long double>> out;
  for (int k = 0; k < m.degree(); ++k) {
    RootEval re = refine_root(m, k, 128);
    out.emplace_back(re.z.re.ld(), re.z.im.ld());
  }
  return out;
}

}  // namespace quadpow
