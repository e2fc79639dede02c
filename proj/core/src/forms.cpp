#include "quadpow/forms.hpp"

#include <algorithm>

namespace quadpow {

LinearChange LinearChange::inverse() const {
  const Scalar D = det();
  if (D.zero()) throw PreconditionError("singular linear change");
  const Scalar inv = D.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

BinaryForm quadratic(const Scalar& a, const Scalar& b, const Scalar& c) { return BinaryForm(std::vector<Scalar>{a, b, c}); }

BinaryForm form_power(const BinaryForm& f, long d, PowerMethod method) {
  if (d < 1) throw PreconditionError("form_power needs a positive exponent");
  return f.pow(d, method);
}

BinaryForm compose(const BinaryForm& f, const LinearChange& m) { return f.compose(m.a, m.b, m.c, m.d); }

BinaryForm synch(const BinaryForm& p, long m, long r) {
  if (m < 1) throw PreconditionError("synch needs m >= 1");
  BinaryForm acc(p.degree());
  for (long j = 0; j < m; ++j) {
    const Scalar w = Scalar::zeta(m, -r * j);
    acc += p.scale_y(Scalar::zeta(m, j)).scaled(w);
  }
  return acc.scaled(Scalar(Rational(1, static_cast<unsigned long>(m))));
}

BinaryForm synch_filter(const BinaryForm& p, long m, long r) {
  if (m < 1) throw PreconditionError("synch needs m >= 1");
  BinaryForm out(p.degree());
  const long rr = ((r % m) + m) % m;
  for (int i = 0; i <= p.degree(); ++i)
    if (i % m == rr) out.coeff(i) = p.coeff(i);
  return out;
}

namespace {

template <class S>
BasicForm<S> psi_sum(long v, long m, long d, const S& alpha) {
  if (m < 1) throw PreconditionError("psi needs m >= 1");
  if (d < 1) throw PreconditionError("psi needs d >= 1");
  BasicForm<S> acc(static_cast<int>(2 * d));
  for (long j = 0; j < m; ++j) {
    const Scalar zl = Scalar::zeta(m, -j), zr = Scalar::zeta(m, j);
    BasicForm<S> q(std::vector<S>{RingTraits<S>::from_scalar(zl), alpha, RingTraits<S>::from_scalar(zr)});
    acc += q.pow(d, PowerMethod::Miller).scaled(RingTraits<S>::from_scalar(Scalar::zeta(m, -v * j)));
  }
  return acc.scaled(RingTraits<S>::from_rational(Rational(1, static_cast<unsigned long>(m))));
}

Poly<Scalar> alpha_power_term(const Rational& c, long e) { return Poly<Scalar>::monomial(Scalar(c), static_cast<std::size_t>(e)); }

}  // namespace

BinaryForm psi(long v, long m, long d, const Scalar& alpha) { return psi_sum<Scalar>(v, m, d, alpha); }

ParamForm psi_formal(long v, long m, long d) { return psi_sum<Poly<Scalar>>(v, m, d, Poly<Scalar>::var()); }

std::optional<ParamForm> psi_closed_form(long m, long d) {
  if (m < 1 || d < 1) throw PreconditionError("psi needs m >= 1 and d >= 1");
  if (!(m > d || (2 * m > d && d >= m))) return std::nullopt;
  ParamForm out(static_cast<int>(2 * d));
  const Integer dfact = factorial(static_cast<unsigned long>(d));
  Poly<Scalar> center;
  for (long r = 0; 2 * r <= d; ++r) {
    const Integer den = factorial(static_cast<unsigned long>(r)) * factorial(static_cast<unsigned long>(r)) *
                        factorial(static_cast<unsigned long>(d - 2 * r));
    center = center + alpha_power_term(make_rational(dfact, den), d - 2 * r);
  }
  out.coeff(static_cast<int>(d)) = center;
  if (d >= m) {
    Poly<Scalar> side;
    for (long r = 0; 2 * r <= d - m; ++r) {
      const Integer den = factorial(static_cast<unsigned long>(r)) * factorial(static_cast<unsigned long>(r + m)) *
                          factorial(static_cast<unsigned long>(d - m - 2 * r));
      side = side + alpha_power_term(make_rational(dfact, den), d - m - 2 * r);
    }
    out.coeff(static_cast<int>(d - m)) = side;
    out.coeff(static_cast<int>(d + m)) = side;
  }
  return out;
}

BinaryForm specialize(const ParamForm& f, const Scalar& alpha) {
  std::vector<Scalar> c;
  c.reserve(f.coeffs().size());
  for (const auto& p : f.coeffs()) c.push_back(p.zero() ? Scalar(0L) : p.eval(alpha));
  return BinaryForm(std::move(c));
}

bool proportional(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) return false;
  const int k = f.degree();
  // pick a pivot index where f is nonzero and compare every 2x2 minor through it
  int piv = -1;
  for (int i = 0; i <= k; ++i)
    if (!f.coeff(i).zero()) {
      piv = i;
      break;
    }
  if (piv < 0) return true;
  for (int j = 0; j <= k; ++j) {
    if (j == piv) continue;
    if (!(f.coeff(piv) * g.coeff(j) - f.coeff(j) * g.coeff(piv)).zero()) return false;
  }
  return true;
}

bool is_even(const BinaryForm& f) {
  for (int i = 1; i <= f.degree(); i += 2)
    if (!f.coeff(i).zero()) return false;
  return true;
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  auto low = [](const BinaryForm& h) {
    for (int i = 0; i <= h.degree(); ++i)
      if (!h.coeff(i).zero()) return i;
    return h.degree();
  };
  if (f.zero() && g.zero()) return BinaryForm(0);
  int e;
  if (f.zero())
    e = low(g);
  else if (g.zero())
    e = low(f);
  else
    e = std::min(low(f), low(g));
  Poly<Scalar> p = gcd(f.dehomogenize(), g.dehomogenize());
  BinaryForm base = BinaryForm::homogenize(p, p.degree());
  return base * BinaryForm::monomial(Scalar(1L), e, e);
}

Scalar quad_resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != 2 || g.degree() != 2) throw PreconditionError("quadratic resultant needs two quadratics");
  const Scalar &a1 = f.coeff(0), &b1 = f.coeff(1), &c1 = f.coeff(2);
  const Scalar &a2 = g.coeff(0), &b2 = g.coeff(1), &c2 = g.coeff(2);
  const Scalar ac = a1 * c2 - a2 * c1;
  return ac * ac - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1);
}

QuadGcd quad_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != 2 || g.degree() != 2) throw PreconditionError("quad_gcd needs two quadratics");
  if (f.zero() || g.zero()) throw PreconditionError("quad_gcd needs nonzero forms");
  if (proportional(f, g)) return {2, form_gcd(f, f)};
  if (!quad_resultant(f, g).zero()) return {0, std::nullopt};
  return {1, form_gcd(f, g)};
}

HonestyReport honest(const FormSet& forms) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j])) return {false, i + 1, j + 1};
  return {};
}

}  // namespace quadpow
