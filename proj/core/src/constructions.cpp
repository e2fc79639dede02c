#include "quadpow/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "quadpow/expr.hpp"

namespace quadpow {

ThetaValue theta(long e, long d) {
  if (e < 1 || d < 1) throw PreconditionError("theta needs e >= 1 and d >= 1");
  if (d % e != 0) throw PreconditionError("theta needs e to divide d");
  ThetaValue best{0, 0};
  for (long t = 1; t <= e; ++t) {
    const long v = 1 + t * (d / e) + e / t;
    if (best.t == 0 || v < best.value) best = {v, t};
  }
  return best;
}

namespace {

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PhiBounds phi_bounds(long k, long d) {
  if (k < 1 || d < 2) throw PreconditionError("phi_bounds needs k >= 1 and d >= 2");
  PhiBounds b;
  b.k = k;
  b.d = d;
  auto& lo = b.lower_candidates;
  auto& up = b.upper_candidates;
  lo.push_back({3, "a dependence needs at least three summands"});
  if (d >= 3) {
    lo.push_back({4, "Liouville: no nonconstant Fermat solutions over C[t] for d >= 3"});
    lo.push_back({isqrt(d + 1) + 2, "Hayman: r > 1 + sqrt(d + 1) for d >= 3"});
  }
  if (k == 2 && d >= 6) lo.push_back({5, "tame/wild classification: no four quadratics for d >= 6"});
  if (k == 1) lo.push_back({d + 2, "linear forms: any d + 1 distinct d-th powers are independent"});

  up.push_back({d + 2, "linear forms: d + 2 powers lie in a (d + 1)-dimensional space"});
  for (long j = 2; j <= std::min(k, d); ++j)
    if (d % j == 0) up.push_back({theta(j, d).value, "Molluzzo synching with forms of degree " + std::to_string(j)});
  if (k >= 2) {
    if (d == 2) up.push_back({3, "Pythagorean squares"});
    if (d >= 3 && d <= 5) up.push_back({4, "explicit four-term identities for d = 3, 4, 5"});
    if (d == 6 || d == 7) up.push_back({5, "synched five-term identities for d = 6, 7"});
    if (d == 14) up.push_back({6, "icosahedral six-term identity for d = 14"});
    if (d >= 4) up.push_back({d / 2 + 2, "trinomial synching: floor(d/2) + 2 summands for d >= 4"});
  }
  b.lower = *std::max_element(lo.begin(), lo.end(), [](const Bound& x, const Bound& y) { return x.value < y.value; });
  b.upper = *std::min_element(up.begin(), up.end(), [](const Bound& x, const Bound& y) { return x.value < y.value; });
  if (b.lower.value > b.upper.value) throw std::logic_error("phi_bounds: lower bound exceeds upper bound");
  if (b.lower.value == b.upper.value) b.exact = b.lower.value;
  return b;
}

QPoly a_poly(long s, Parity parity) {
  const bool odd = parity == Parity::Odd;
  if (odd ? s < 2 : s < 3) throw PreconditionError(odd ? "a_poly odd needs s >= 2" : "a_poly even needs s >= 3");
  const long d = odd ? 2 * s + 1 : 2 * s;
  const long m = s + 1;
  // exponent pattern x^(2r+u) y^(u+2t) with r - t = m, u = d - r - t
  QPoly out;
  const Integer dfact = factorial(d);
  for (long t = 0; d - 2 * t - m >= 0; ++t) {
    const long u = d - 2 * t - m;
    const Integer den = factorial(t + m) * factorial(u) * factorial(t);
    out += QPoly::monomial(make_rational(dfact, den), static_cast<std::size_t>(u));
  }
  return out;
}

std::string recipe_name(const ConstructionRecipe& r) {
  struct Namer {
    std::string operator()(const recipe::Molluzzo& m) const {
      return "molluzzo(" + std::to_string(m.e) + "," + std::to_string(m.e_prime) + "," + std::to_string(m.t) + ")";
    }
    std::string operator()(const recipe::Monomial& m) const { return "monomial(" + std::to_string(m.s) + ")"; }
    std::string operator()(const recipe::Quadrature& q) const {
      return "quadrature(" + std::to_string(q.s) + "," + std::to_string(q.theta.real()) + "," + std::to_string(q.theta.imag()) + ")";
    }
    std::string operator()(const recipe::PsiOdd& p) const { return "psi_odd(" + std::to_string(p.s) + ")"; }
    std::string operator()(const recipe::PsiEven& p) const { return "psi_even(" + std::to_string(p.s) + ")"; }
    std::string operator()(const recipe::Icosa14&) const { return "icosa14"; }
    std::string operator()(const recipe::Catalog& c) const { return "catalog(" + c.name + ")"; }
  };
  return std::visit(Namer{}, r);
}

namespace {

BinaryForm Q(const Scalar& a, const Scalar& b, const Scalar& c) { return quadratic(a, b, c); }
Scalar S(const char* text) { return parse_scalar(text); }
const BinaryForm& xy() {
  static const BinaryForm f = Q(Scalar(0L), Scalar(1L), Scalar(0L));
  return f;
}

PowerIdentity two_sided(long d, const std::vector<std::pair<Scalar, BinaryForm>>& lhs,
                        const std::vector<std::pair<Scalar, BinaryForm>>& rhs) {
  PowerIdentity id;
  id.d = d;
  for (const auto& [l, f] : lhs) id.terms.push_back({l, f, Side::Left});
  for (const auto& [l, f] : rhs) id.terms.push_back({l, f, Side::Right});
  return id;
}

// sum_j f_j^d - lambda (xy)^d for the trinomial synching at a root of the
// nonzero-root part of a_poly
PowerIdentity psi_identity(long s, Parity parity) {
  QPoly a = a_poly(s, parity);
  a = a.shifted_down(a.valuation());
  if (a.degree() < 1) throw std::logic_error("a_poly has no nonzero root");
  std::vector<Cyclotomic> cc;
  for (const auto& q : a.coeffs()) cc.push_back(Cyclotomic(q));
  const Scalar alpha = Scalar::root_of(CPoly(std::move(cc)));
  const long d = parity == Parity::Odd ? 2 * s + 1 : 2 * s;
  const long m = s + 1;
  PowerIdentity id;
  id.d = d;
  BinaryForm sum(static_cast<int>(2 * d));
  for (long j = 0; j < m; ++j) {
    BinaryForm f = Q(Scalar::zeta(m, -j), alpha, Scalar::zeta(m, j));
    sum += form_power(f, d, PowerMethod::Auto);
    id.terms.push_back({Scalar(1L), f, Side::Left});
  }
  const Scalar centre = sum.coeff(static_cast<int>(d));
  if (centre.zero()) throw std::logic_error("psi construction lost its (xy)^d term");
  id.terms.push_back({centre, xy(), Side::Right});
  return id;
}

}  // namespace

NumericCheck quadrature_check(long s, std::complex<double> theta_in) {
  if (s < 1) throw PreconditionError("quadrature needs s >= 1");
  using C = std::complex<long double>;
  using V = std::vector<C>;
  auto mul = [](const V& a, const V& b) {
    V r(a.size() + b.size() - 1, C(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto power = [&](const V& f, long e) {
    V r{C(1)};
    for (long i = 0; i < e; ++i) r = mul(r, f);
    return r;
  };
  const C th(theta_in.real(), theta_in.imag());
  const long double pi = std::numbers::pi_v<long double>;
  V sum(static_cast<std::size_t>(8 * s + 1), C(0));
  for (long j = 0; j <= s; ++j) {
    const C ang = C(static_cast<long double>(j) * pi / static_cast<long double>(s + 1)) + th;
    const C c = std::cos(ang), sn = std::sin(ang);
    const V f = power(V{c, C(2) * sn, -c}, 2 * s);
    for (std::size_t i = 0; i < f.size(); ++i) sum[i] += f[i] / C(static_cast<long double>(s + 1));
  }
  const long double scale = std::ldexp(std::stold(binomial(2 * s, s).get_str()), static_cast<int>(-2 * s));
  const V rhs = power(V{C(1), C(0), C(1)}, 2 * s);
  long double worst = 0, size = 1;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    worst = std::max(worst, std::abs(sum[i] - scale * rhs[i]));
    size = std::max(size, std::abs(scale * rhs[i]));
  }
  NumericCheck out;
  out.terms = static_cast<std::size_t>(s + 2);
  out.max_residual = static_cast<double>(worst / size);
  out.tolerance = kQuadratureTolerance;
  out.pass = out.max_residual <= out.tolerance;
  return out;
}

Construction build(const ConstructionRecipe& r) {
  Construction out;
  out.recipe = recipe_name(r);
  if (const auto* m = std::get_if<recipe::Molluzzo>(&r)) {
    if (m->e < 1 || m->e_prime < 1 || m->t < 1) throw PreconditionError("molluzzo needs e, e', t >= 1");
    const long e = m->e, d = m->e * m->e_prime, mm = m->t * m->e_prime;
    PowerIdentity id;
    id.d = d;
    for (long j = 0; j < mm; ++j) {
      BinaryForm f(static_cast<int>(e));
      f.coeff(0) = Scalar(1L);
      f.coeff(static_cast<int>(e)) += Scalar::zeta(mm, j);
      id.terms.push_back({Scalar(1L), f, Side::Left});
    }
    for (long i = 0; i <= e / m->t; ++i)
      id.terms.push_back({Scalar(Rational(binomial(d, i * mm) * mm)),
                          BinaryForm::monomial(Scalar(1L), static_cast<int>(e), static_cast<int>(i * m->t)), Side::Right});
    out.description = "root-of-unity average of (x^e + zeta y^e)^d against monomial d-th powers";
    out.identity = std::move(id);
  } else if (const auto* mo = std::get_if<recipe::Monomial>(&r)) {
    if (mo->s < 1) throw PreconditionError("monomial needs s >= 1");
    const long s = mo->s;
    PowerIdentity id;
    id.d = 2 * s;
    for (long j = 0; j <= s; ++j)
      id.terms.push_back({Scalar(1L), Q(Scalar::zeta(2 * s + 2, -j), Scalar(0L), Scalar::zeta(2 * s + 2, j)), Side::Left});
    id.terms.push_back({Scalar(Rational(binomial(2 * s, s) * (s + 1))), xy(), Side::Right});
    out.description = "central synching of even quadratics onto (xy)^(2s)";
    out.identity = std::move(id);
  } else if (const auto* q = std::get_if<recipe::Quadrature>(&r)) {
    out.description = "numeric rotated quadrature family, exact verification not attempted";
    out.numeric = quadrature_check(q->s, q->theta);
    out.term_count = out.numeric->terms;
    return out;
  } else if (const auto* po = std::get_if<recipe::PsiOdd>(&r)) {
    if (po->s < 2) throw PreconditionError("psi_odd needs s >= 2");
    out.description = "trinomial synching at a nonzero root of the side coefficient, odd degree";
    out.identity = psi_identity(po->s, Parity::Odd);
  } else if (const auto* pe = std::get_if<recipe::PsiEven>(&r)) {
    if (pe->s < 3) throw PreconditionError("psi_even needs s >= 3");
    out.description = "trinomial synching at a nonzero root of the side coefficient, even degree";
    out.identity = psi_identity(pe->s, Parity::Even);
  } else if (std::holds_alternative<recipe::Icosa14>(r)) {
    out.description = catalog_entry("icosa14").description;
    out.identity = catalog("icosa14");
  } else {
    const auto& c = std::get<recipe::Catalog>(r);
    const CatalogEntry& e = catalog_entry(c.name);
    out.description = e.description;
    out.identity = e.identity;
  }
  out.term_count = out.identity->terms.size();
  return out;
}

IcosaSpecial icosa_special() {
  const ParamForm f = psi_formal(0, 5, 14);
  auto to_q = [](const Poly<Scalar>& p) {
    std::vector<Rational> c;
    for (const auto& s : p.coeffs()) c.push_back(s.rational_value());
    return QPoly(std::move(c));
  };
  IcosaSpecial out;
  out.a = to_q(f.coeff(4));
  out.b = to_q(f.coeff(9));
  out.common_factor = gcd(out.a, out.b);
  out.divisible_by_one_plus_alpha_sq = (out.common_factor % QPoly(std::vector<Rational>{1, 0, 1})).zero();
  const Scalar i = Scalar::zeta(4);
  const BinaryForm value = specialize(f, i);
  PowerIdentity id;
  id.d = 14;
  for (long j = 0; j < 5; ++j)
    id.terms.push_back({Scalar(Rational(1, 5)), Q(Scalar::zeta(5, -j), i, Scalar::zeta(5, j)), Side::Left});
  id.terms.push_back({value.coeff(14), xy(), Side::Right});
  out.specialized = std::move(id);
  return out;
}

BinaryForm left_value(const PowerIdentity& id) {
  BinaryForm acc(id.form_degree() * static_cast<int>(id.d));
  for (const auto& t : id.terms)
    if (t.side == Side::Left) acc += form_power(t.form, id.d, PowerMethod::Auto).scaled(t.lambda);
  return acc;
}

bool same_up_to_scale(const PowerIdentity& a, const PowerIdentity& b) {
  if (a.d != b.d || a.terms.size() != b.terms.size() || a.terms.empty()) return false;
  const Scalar a0 = a.terms[0].signed_lambda(), b0 = b.terms[0].signed_lambda();
  if (a0.zero() || b0.zero()) return false;
  const Scalar kappa = b0 / a0;
  for (std::size_t j = 0; j < a.terms.size(); ++j) {
    if (a.terms[j].form != b.terms[j].form) return false;
    if (a.terms[j].signed_lambda() * kappa != b.terms[j].signed_lambda()) return false;
  }
  return true;
}

std::optional<CousinWitness> match_cousin(const PowerIdentity& source, const PowerIdentity& target, const LinearChange& m) {
  if (source.terms.size() != target.terms.size() || source.d != target.d) return std::nullopt;
  const std::size_t r = source.terms.size();
  std::vector<BinaryForm> moved;
  for (const auto& t : source.terms) moved.push_back(compose(t.form, m));
  CousinWitness w;
  w.m = m;
  std::vector<bool> used(r, false);
  for (std::size_t j = 0; j < r; ++j) {
    const BinaryForm& g = target.terms[j].form;
    bool found = false;
    for (std::size_t p = 0; p < r && !found; ++p) {
      if (used[p] || moved[p].degree() != g.degree() || !proportional(moved[p], g)) continue;
      int lead = 0;
      while (moved[p].coeff(lead).zero()) ++lead;
      const Scalar c = g.coeff(lead) / moved[p].coeff(lead);
      if (moved[p].scaled(c) != g) continue;
      used[p] = found = true;
      w.pi.push_back(p);
      w.c.push_back(c);
    }
    if (!found) return std::nullopt;
  }
  if (!same_up_to_scale(cousin_apply(source, w.pi, w.c, m), target)) return std::nullopt;
  return w;
}

CatalogEntry threefold(const Scalar& a) {
  if (a.zero() || a == Scalar(1L) || a == Scalar(-1L)) throw PreconditionError("threefold needs alpha not in {0, 1, -1}");
  const Scalar one(1L), w = Scalar::zeta(3), w2 = Scalar::zeta(3, 2);
  auto rep = [&](const Scalar& u, const Scalar& v) {
    return std::vector<std::pair<Scalar, BinaryForm>>{{one, Q(u * a, -one, v * a)}, {a, Q(-u, a, -v)}};
  };
  CatalogEntry e;
  e.name = "threefold";
  e.description = "cubic family with three representations as a sum of two cubes";
  e.identity = two_sided(3, rep(one, one), rep(w2, w));
  e.related.push_back(two_sided(3, rep(w2, w), rep(w, w2)));
  BinaryForm c1(std::vector<Scalar>{a, Scalar(0L), Scalar(0L), one}), c2(std::vector<Scalar>{one, Scalar(0L), Scalar(0L), a});
  e.value = (c1 * c2).scaled(a * a - one);
  return e;
}

CatalogEntry threefold_real(const Scalar& a) {
  if (a.zero() || a == Scalar(1L) || a == Scalar(-1L)) throw PreconditionError("threefold needs alpha not in {0, 1, -1}");
  const Scalar one(1L), two(2L), three(3L), six(6L), zero(0L);
  auto mixed = [&](const Scalar& sign) {
    return std::vector<std::pair<Scalar, BinaryForm>>{{one, Q(one + a, sign * six * a, three * (one - a))},
                                                      {a, Q(-(one + a), -sign * six, three * (one - a))}};
  };
  CatalogEntry e;
  e.name = "threefold_real";
  e.description = "the cubic family after a linear change making it rational for rational alpha";
  std::vector<std::pair<Scalar, BinaryForm>> diag{{one, Q(one - two * a, zero, three * (one + two * a))},
                                                  {a, Q(two - a, zero, -three * (two + a))}};
  e.identity = two_sided(3, diag, mixed(one));
  e.related.push_back(two_sided(3, mixed(one), mixed(-one)));
  return e;
}

namespace {

using Terms = std::vector<std::pair<Scalar, BinaryForm>>;

BinaryForm even_octic(const std::vector<long>& c) {
  BinaryForm f(static_cast<int>(2 * (c.size() - 1)));
  for (std::size_t j = 0; j < c.size(); ++j) f.coeff(static_cast<int>(2 * j)) = Scalar(c[j]);
  return f;
}

// p(x, y) = p(x, -y) for a representation whose forms are not even
PowerIdentity mirror_identity(long d, const Terms& rep) {
  Terms other;
  for (const auto& [l, f] : rep) other.push_back({l, f.scale_y(Scalar(-1L))});
  return two_sided(d, rep, other);
}

CousinWitness witness(std::string source, std::vector<std::size_t> pi, std::vector<const char*> c, LinearChange m) {
  CousinWitness w;
  w.source = std::move(source);
  w.pi = std::move(pi);
  for (const char* s : c) w.c.push_back(S(s));
  w.m = m;
  return w;
}

std::vector<CatalogEntry> make_catalog() {
  const Scalar one(1L), zero(0L), i = S("i"), w = S("omega"), w2 = S("omega^2");
  const Scalar r2 = S("sqrt(2)"), r3 = S("sqrt(3)"), rm2 = S("sqrt(-2)"), rm3 = S("sqrt(-3)"), rm6 = S("sqrt(-6)");
  const Scalar phi = S("phi"), r5 = S("sqrt(5)");
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string desc, PowerIdentity id) -> CatalogEntry& {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(desc);
    e.identity = std::move(id);
    out.push_back(std::move(e));
    return out.back();
  };

  {
    auto& e = add("pythagorean", "Pythagorean parameterization as squares of quadratics",
                  two_sided(2, {{one, Q(one, zero, -one)}, {one, Q(zero, S("2"), zero)}}, {{one, Q(one, zero, one)}}));
    e.value = form_power(Q(one, zero, one), 2);
  }
  {
    auto& e = add("cubic", "two cubes of quadratics equal to 2x^6 - 2y^6",
                  two_sided(3, {{one, Q(one, one, -one)}, {one, Q(one, -one, -one)}},
                            {{S("2"), Q(one, zero, zero)}, {S("2"), Q(zero, zero, -one)}}));
    e.value = BinaryForm(std::vector<Scalar>{S("2"), zero, zero, zero, zero, zero, S("-2")});
  }
  {
    auto& e = add("quartic", "three fourth powers of even quadratics summing to 18(xy)^4",
                  two_sided(4, {{one, Q(one, zero, one)}, {one, Q(w, zero, w2)}, {one, Q(w2, zero, w)}},
                            {{S("18"), xy()}}));
    e.value = BinaryForm::monomial(S("18"), 8, 4);
  }
  {
    auto& e = add("quarcous", "integral quartic cousin: three fourth powers equal to 2(x^2 + xy + y^2)^4",
                  two_sided(4, {{one, Q(one, S("2"), zero)}, {one, Q(zero, S("2"), one)}, {one, Q(one, zero, -one)}},
                            {{S("2"), Q(one, one, one)}}));
    e.cousin = witness("quartic", {1, 0, 2, 3}, {"1/3 + 2/3*omega", "-1/3 - 2/3*omega", "-1/3 - 2/3*omega", "-i"}, {i, -i * w, one, -w2});
  }
  {
    Terms t;
    for (long k = 0; k < 4; ++k) {
      BinaryForm f = Q(Scalar::zeta(4, k), rm2, Scalar::zeta(4, -k));
      t.push_back({one, k % 2 ? -f : f});
    }
    auto& e = add("quintic", "four fifth powers of quadratics summing to zero; Klein set a cube", two_sided(5, t, {}));
    const char* c1 = "-1/6 + 1/3*zeta(12,1) - 1/6*zeta(12,3)";
    const char* c2 = "1/6 - 1/3*zeta(12,1) + 1/6*zeta(12,3)";
    e.cousin = witness("quintic_synch", {3, 2, 0, 1}, {c1, c2, c2, c2}, {rm2, -(one + r3), -(one + r3), rm2});
  }
  {
    Terms t;
    for (long k = 0; k < 4; ++k) t.push_back({Scalar::zeta(4, k), Q(one, zero, Scalar::zeta(4, k))});
    auto& e = add("sextic", "four sixth powers of even quadratics summing to 80(xy)^6", two_sided(6, t, {{S("80"), xy()}}));
    e.value = BinaryForm::monomial(S("80"), 12, 6);
  }
  {
    Terms t;
    for (long k = 0; k < 4; ++k) t.push_back({one, Q(Scalar::zeta(4, -k), S("sqrt(-6/5)"), Scalar::zeta(4, k))});
    add("septic", "four seventh powers of trinomials against one power of a multiple of xy",
        two_sided(7, t, {{S("26") * r3, Q(zero, S("sqrt(-8/5)"), zero)}}));
  }
  {
    Terms t;
    for (long j = 0; j < 5; ++j) t.push_back({one, Q(Scalar::zeta(5, j), i, Scalar::zeta(5, -j))});
    auto& e = add("icosa14", "five 14th powers of quadratics equal to 5^7 (xy)^14; Klein set an icosahedron",
                  two_sided(14, t, {{S("5^7"), xy()}}));
    e.value = BinaryForm::monomial(S("5^7"), 28, 14);
  }
  out.push_back(threefold(Scalar(2L)));
  out.push_back(threefold_real(Scalar(2L)));
  {
    auto rep = [&](const Scalar& u, const Scalar& v) {
      return Terms{{one, Q(u, r3, -v)}, {-one, Q(u, -r3, -v)}};
    };
    auto& e = add("quartic13", "six quartic forms giving three differences of fourth powers equal to 8 sqrt(3) xy (x^6 - y^6)",
                  two_sided(4, rep(one, one), rep(w2, w)));
    e.related.push_back(two_sided(4, rep(w2, w), rep(w, w2)));
    e.value = BinaryForm(std::vector<Scalar>{zero, S("8") * r3, zero, zero, zero, zero, zero, S("-8") * r3, zero});
  }
  {
    auto& e = add("quartic12", "two representations of 18x^8 - 28x^4y^4 + 18y^8 as a sum of two fourth powers",
                  two_sided(4, {{one, Q(r3, r2, -r3)}, {one, Q(r3, -r2, -r3)}}, {{one, Q(r3, i * r2, r3)}, {one, Q(r3, -i * r2, r3)}}));
    e.value = even_octic({18, 0, -28, 0, 18});
  }
  {
    Terms t;
    for (long k = 0; k < 3; ++k) t.push_back({one, Q(Scalar::zeta(3, k), S("sqrt(-1/2)"), Scalar::zeta(3, -k))});
    add("quintic_synch", "three-fold synching in degree five onto a single power of a multiple of xy",
        two_sided(5, t, {{one, Q(zero, S("sqrt(-9/2)"), zero)}}));
  }
  {
    Terms t;
    for (long k = 0; k < 4; ++k) t.push_back({one, Q(Scalar::zeta(4, -k), S("sqrt(-2/5)"), Scalar::zeta(4, k))});
    add("sextic_synch", "four-fold synching in degree six onto 11 times a sixth power of a multiple of xy",
        two_sided(6, t, {{S("11"), Q(zero, S("sqrt(-8/5)"), zero)}}));
  }
  {
    Terms t;
    for (long k = 0; k < 3; ++k) t.push_back({one, Q(Scalar::zeta(3, k), phi * phi, -Scalar::zeta(3, -k))});
    for (long k = 0; k < 3; ++k) t.push_back({one, Q(Scalar::zeta(3, k) * phi, -phi.inverse(), -Scalar::zeta(3, -k) * phi)});
    add("icosa_triangles", "icosahedral identity split into two three-fold synched halves", two_sided(14, t, {}));
  }
  {
    const Scalar u = (one - S("2") * i) / r5, v = (one + S("2") * i) / r5;
    Terms lhs{{one, Q(one, S("2") * phi, -one)},
              {one, Q(one, S("-2") * phi, -one)},
              {one, Q(phi + i, zero, -(phi + i) * u)},
              {one, Q(phi - i, zero, -(phi - i) * v)}};
    Terms rhs{{one, Q(phi, S("2") * i, phi)}, {one, Q(phi, S("-2") * i, phi)}};
    add("icosa_coordinates", "icosahedral 14th-power identity built from vertex coordinates", two_sided(14, lhs, rhs));
  }
  {
    const Scalar r6 = S("sqrt(6)");
    Terms t;
    for (long k = 0; k < 4; ++k) {
      BinaryForm f(std::vector<Scalar>{one, Scalar::zeta(4, k) * r6, S("-6") * Scalar::zeta(4, 2 * k), -r6 * Scalar::zeta(4, 3 * k), one});
      t.push_back({k % 2 ? -one : one, f});
    }
    add("quarcube", "four cubes of linearly independent quartics with alternating signs summing to zero", two_sided(3, t, {}));
  }
  {
    auto& e = add("tame43", "even octic from the three-term quartic identity, two representations",
                  two_sided(4, {{one, Q(one, zero, one)}, {S("-18"), xy()}}, {{-one, Q(w, zero, w2)}, {-one, Q(w2, zero, w)}}));
    e.value = even_octic({1, 4, -12, 4, 1});
    e.cousin = witness("quartic", {0, 3, 1, 2}, {"1", "1", "1", "1"}, LinearChange::identity());
  }
  {
    auto& e = add("tame41", "the previous octic after (x, y) -> (x + y, x - y), tame pair with xy-coefficient 2 sqrt(-3)",
                  two_sided(4, {{-one, Q(S("2"), zero, S("2"))}, {S("18"), Q(one, zero, -one)}},
                            {{one, Q(one, S("2") * rm3, one)}, {one, Q(one, S("-2") * rm3, one)}}));
    e.value = even_octic({2, -136, 12, -136, 2});
    e.cousin = witness("tame43", {0, 1, 3, 2}, {"1", "1", "-1", "-1"}, {one, one, one, -one});
  }
  {
    const Scalar al = (S("2") + rm3) / S("2"), be = (S("2") - rm3) / S("2");
    auto rep = [&](const Scalar& sg) { return Terms{{one, Q(w, sg * r3, -w2)}, {-one, Q(w2, sg * r3, -w)}}; };
    auto& e = add("late4", "even octic with three representations as a difference of two fourth powers",
                  two_sided(4, {{one, Q(al, zero, -be)}, {-one, Q(be, zero, -al)}}, rep(-one)));
    e.related.push_back(two_sided(4, rep(-one), rep(one)));
    e.value = even_octic({1, -14, 0, 14, -1}).scaled(rm3);
  }
  {
    auto& e = add("last2", "even octic with an even pair and a tame pair of xy-coefficient 2 sqrt(-6)",
                  two_sided(4, {{one, Q(one + rm6, zero, one - rm6)}, {one, Q(one - rm6, zero, one + rm6)}},
                            {{one, Q(one, S("2") * rm6, one)}, {one, Q(one, S("-2") * rm6, one)}}));
    e.value = even_octic({2, -280, 588, -280, 2});
  }
  {
    auto& e = add("tame51", "even decic with an even pair and a tame pair of fifth powers",
                  two_sided(5, {{one, Q(one - rm2, zero, one + rm2)}, {one, Q(one + rm2, zero, one - rm2)}},
                            {{one, Q(one, S("-2") * rm2, one)}, {one, Q(one, S("2") * rm2, one)}}));
    e.value = even_octic({2, -150, 180, 180, -150, 2});
    e.cousin = witness("flipped_quintic", {0, 1, 2, 3}, {"-1/2*zeta(8,1) - 1/2*zeta(8,3)", "-1/2*zeta(8,1) - 1/2*zeta(8,3)", "1/2*zeta(8,1) + 1/2*zeta(8,3)", "1/2*zeta(8,1) + 1/2*zeta(8,3)"}, {one, i, one, -i});
  }
  {
    auto& e = add("flipped_quintic", "the quintic identity rearranged as two equal sums of two fifth powers",
                  two_sided(5, {{one, Q(one, rm2, one)}, {one, Q(-one, rm2, -one)}}, {{-one, Q(i, -rm2, -i)}, {-one, Q(-i, -rm2, i)}}));
    e.value = BinaryForm(std::vector<Scalar>{zero, S("10") * rm2, zero, zero, zero, S("-12") * rm2, zero, zero, zero, S("10") * rm2, zero});
    e.cousin = witness("quintic", {0, 2, 3, 1}, {"1", "1", "1", "1"}, LinearChange::identity());
  }
  {
    add("wild4_plus", "wild quartic pair: its even sum equals the sum of the mirrored pair",
        mirror_identity(4, {{one, Q(one, -rm3, one)}, {one, Q(w2, rm3, w)}}));
    add("wild4_minus", "second wild quartic pair, with a minus sign",
        mirror_identity(4, {{one, Q(one, rm3, one)}, {-one, Q(w2, rm3, w)}}));
  }
  {
    auto& p = add("wild5_plus", "wild quintic pair with lambda = i",
                  mirror_identity(5, {{one, Q(one, -i * r2, one)}, {i, Q(one, r2, -one)}}));
    p.value = BinaryForm(std::vector<Scalar>{one, zero, S("15") * i, zero, S("-30"), zero, S("30") * i, zero, S("-15"), zero, -i})
                  .scaled(one + i);
    auto& m = add("wild5_minus", "wild quintic pair with lambda = -i",
                  mirror_identity(5, {{one, Q(one, i * r2, one)}, {-i, Q(one, r2, -one)}}));
    m.value = BinaryForm(std::vector<Scalar>{one, zero, S("-15") * i, zero, S("-30"), zero, S("-30") * i, zero, S("-15"), zero, i})
                  .scaled(one - i);
  }
  {
    auto& e = add("proth", "f^4 + g^4 + (f + g)^4 = 2(f^2 + fg + g^2)^2 at f = x, g = y, read as squares of quadratics",
                  two_sided(2, {{one, Q(one, zero, zero)}, {one, Q(zero, zero, one)}, {one, Q(one, S("2"), one)}},
                            {{S("2"), Q(one, one, one)}}));
    e.value = form_power(Q(one, one, one), 2).scaled(S("2"));
  }
  {
    auto& e = add("ferrari", "ternary quartic identity after the substitution x = a - b, y = b + c",
                  two_sided(4, {{one, Q(one, S("2"), zero)}, {one, Q(zero, S("-2"), -one)}, {one, Q(-one, zero, one)}},
                            {{S("2"), Q(one, one, one)}}));
    e.value = form_power(Q(one, one, one), 4).scaled(S("2"));
    e.cousin = witness("quarcous", {0, 1, 2, 3}, {"1", "-1", "-1", "1"}, LinearChange::identity());
  }
  {
    auto& e = add("dio4", "f^4 + g^4 + (f + g)^4 identity at f = x^2 + y^2, g = omega x^2 + omega^2 y^2",
                  two_sided(4, {{one, Q(one, zero, one)}, {one, Q(w, zero, w2)}, {one, Q(w2, zero, w)}}, {{S("2"), Q(zero, r3, zero)}}));
    e.value = BinaryForm::monomial(S("18"), 8, 4);
    e.cousin = witness("quartic", {0, 1, 2, 3}, {"1", "1", "1", "2*zeta(12,1) - zeta(12,3)"}, LinearChange::identity());
  }
  return out;
}

struct CatalogTable {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> index;
};

const CatalogTable& table() {
  static const CatalogTable t = [] {
    CatalogTable t;
    t.entries = make_catalog();
    for (std::size_t j = 0; j < t.entries.size(); ++j) t.index.emplace(t.entries[j].name, j);
    return t;
  }();
  return t;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : table().entries) out.push_back(e.name);
  return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& t = table();
  auto it = t.index.find(name);
  if (it == t.index.end()) {
    std::string msg = "unknown catalog name '" + name + "'; available:";
    for (const auto& e : t.entries) msg += " " + e.name;
    throw PreconditionError(msg);
  }
  return t.entries[it->second];
}

PowerIdentity catalog(const std::string& name) { return catalog_entry(name).identity; }

EntryCheck check_entry(const CatalogEntry& e) {
  EntryCheck c;
  c.identity = verify_identity(e.identity).pass;
  for (const auto& r : e.related) c.related = c.related && verify_identity(r).pass;
  if (e.value) {
    c.value = left_value(e.identity) == *e.value;
    for (const auto& r : e.related) c.value = c.value && left_value(r) == *e.value;
  }
  if (e.cousin) {
    const auto& w = *e.cousin;
    try {
      c.cousin = same_up_to_scale(cousin_apply(catalog(w.source), w.pi, w.c, w.m), e.identity);
    } catch (const Error&) {
      c.cousin = false;
    }
  }
  return c;
}

}  // namespace quadpow
