#include <doctest.h>

#include <set>

#include "quadpow/constructions.hpp"
#include "quadpow/expr.hpp"

using namespace quadpow;

namespace {

Scalar P(const char* s) { return parse_scalar(s); }

long theta_closed(long d) {
  long r = 0;
  while ((r + 1) * (r + 1) <= 4 * d + 1) ++r;
  return 1 + r;
}

// coefficient of x^(2d-i) y^i in Psi(0, s+1, d; alpha) by formal summation
QPoly psi_side(long s, Parity parity) {
  const long d = parity == Parity::Odd ? 2 * s + 1 : 2 * s;
  const long i = parity == Parity::Odd ? s : s - 1;
  const ParamForm f = psi_formal(0, s + 1, d);
  std::vector<Rational> c;
  for (const auto& v : f.coeff(static_cast<int>(i)).coeffs()) c.push_back(v.rational_value());
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("theta examples") {
  CHECK(theta(9, 9).value == 7);
  CHECK(theta(8, 72).value == 18);
  CHECK(theta(9, 72).value == 18);
  CHECK(theta(12, 72).value == 19);
  for (long d = 1; d <= 30; ++d) CHECK(theta(1, d).value == d + 2);
  CHECK_THROWS_AS(theta(5, 12), PreconditionError);
  CHECK_THROWS_AS(theta(0, 12), PreconditionError);
  // ties go to the smaller t: 1 + t + floor(2/t) is 4 at t = 1 and t = 2
  CHECK(theta(2, 2).t == 1);
}

TEST_CASE("theta(d, d) closed form for 2 <= d <= 200") {
  for (long d = 2; d <= 200; ++d) REQUIRE(theta(d, d).value == theta_closed(d));
}

TEST_CASE("phi_bounds examples") {
  PhiBounds a = phi_bounds(2, 5);
  REQUIRE(a.exact.has_value());
  CHECK(*a.exact == 4);
  PhiBounds b = phi_bounds(2, 7);
  REQUIRE(b.exact.has_value());
  CHECK(*b.exact == 5);
  CHECK(phi_bounds(15, 15).upper.value == 8);
  CHECK(phi_bounds(2, 15).upper.value == 9);
  CHECK(phi_bounds(2, 14).upper.value == 6);
  CHECK(*phi_bounds(3, 2).exact == 3);
  CHECK(*phi_bounds(2, 3).exact == 4);
  for (long d = 2; d <= 40; ++d) CHECK(*phi_bounds(1, d).exact == d + 2);
  CHECK_FALSE(phi_bounds(2, 8).exact.has_value());
  CHECK(phi_bounds(2, 8).lower.value == 5);
  CHECK(phi_bounds(2, 8).upper.value == 6);
}

TEST_CASE("phi_bounds is monotone in k and every bound is sourced") {
  for (long d = 2; d <= 80; ++d) {
    long prev = -1;
    for (long k = 1; k <= 20; ++k) {
      PhiBounds b = phi_bounds(k, d);
      REQUIRE(b.lower.value >= 3);
      REQUIRE(b.lower.value <= b.upper.value);
      REQUIRE_FALSE(b.lower.source.empty());
      REQUIRE_FALSE(b.upper.source.empty());
      if (prev >= 0) REQUIRE(b.upper.value <= prev);
      prev = b.upper.value;
    }
  }
}

TEST_CASE("a_poly examples") {
  CHECK(a_poly(2, Parity::Odd) == QPoly(std::vector<Rational>{5, 0, 10}));
  CHECK(a_poly(3, Parity::Odd) == QPoly(std::vector<Rational>{0, 42, 0, 35}));
  CHECK(a_poly(3, Parity::Even) == QPoly(std::vector<Rational>{6, 0, 15}));
  CHECK_THROWS_AS(a_poly(1, Parity::Odd), PreconditionError);
  CHECK_THROWS_AS(a_poly(2, Parity::Even), PreconditionError);
}

TEST_CASE("a_poly agrees with formal synching and its leading terms") {
  for (long s = 2; s <= 7; ++s) {
    QPoly a = a_poly(s, Parity::Odd);
    CHECK(a == psi_side(s, Parity::Odd));
    CHECK(a.coeff(static_cast<std::size_t>(s)) == Rational(binomial(2 * s + 1, s)));
    CHECK(a.coeff(static_cast<std::size_t>(s - 2)) == Rational(binomial(2 * s, s - 2) * (2 * s + 1)));
  }
  for (long s = 3; s <= 7; ++s) {
    QPoly a = a_poly(s, Parity::Even);
    CHECK(a == psi_side(s, Parity::Even));
    CHECK(a.coeff(static_cast<std::size_t>(s - 1)) == Rational(binomial(2 * s, s - 1)));
    CHECK(a.coeff(static_cast<std::size_t>(s - 3)) == Rational(binomial(2 * s - 1, s - 3) * (2 * s)));
  }
}

TEST_CASE("build monomial") {
  for (long s = 1; s <= 6; ++s) {
    Construction c = build(recipe::Monomial{s});
    REQUIRE(c.identity);
    CHECK(c.term_count == static_cast<std::size_t>(s + 2));
    CHECK(verify_identity(*c.identity).pass);
    CHECK(c.identity->terms.back().lambda == Scalar(Rational(binomial(2 * s, s) * (s + 1))));
  }
  Construction three = build(recipe::Monomial{3});
  CHECK(three.identity->terms.back().lambda == Scalar(80L));
  CHECK(left_value(*three.identity) == BinaryForm::monomial(Scalar(80L), 12, 6));

  auto w = match_cousin(catalog("pythagorean"), *build(recipe::Monomial{1}).identity, LinearChange::identity());
  REQUIRE(w.has_value());
  CHECK(w->pi == std::vector<std::size_t>{2, 0, 1});
  CHECK(w->c[1] == -P("i"));
  CHECK(w->c[2] == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(build(recipe::Monomial{0}), PreconditionError);
}

TEST_CASE("build psi_odd and psi_even give floor(d/2) + 2 terms") {
  for (long s = 2; s <= 8; ++s) {
    Construction c = build(recipe::PsiOdd{s});
    REQUIRE(c.identity);
    CHECK(c.term_count == static_cast<std::size_t>(s + 2));
    CHECK(c.term_count == static_cast<std::size_t>(c.identity->d / 2 + 2));
    CHECK(verify_identity(*c.identity).pass);
  }
  for (long s = 3; s <= 8; ++s) {
    Construction c = build(recipe::PsiEven{s});
    REQUIRE(c.identity);
    CHECK(c.term_count == static_cast<std::size_t>(s + 2));
    CHECK(c.term_count == static_cast<std::size_t>(c.identity->d / 2 + 2));
    CHECK(verify_identity(*c.identity).pass);
  }
  CHECK_THROWS_AS(build(recipe::PsiOdd{1}), PreconditionError);
  CHECK_THROWS_AS(build(recipe::PsiEven{2}), PreconditionError);
}

TEST_CASE("psi_odd(2) is the quintic synching with (sqrt(-9/2) xy)^5") {
  Construction c = build(recipe::PsiOdd{2});
  const Scalar alpha = c.identity->terms[0].form.coeff(1);
  CHECK(alpha * alpha == Scalar(Rational(-1, 2)));
  CHECK(c.identity->terms.back().lambda == (Scalar(3L) * alpha).pow(5));

  const Scalar a0 = sqrt_rational(Rational(-1, 2));
  CHECK(psi(0, 3, 5, a0).scaled(Scalar(3L)) == form_power(BinaryForm::monomial(sqrt_rational(Rational(-9, 2)), 2, 1), 5));
  CHECK(verify_identity(catalog("quintic_synch")).pass);
}

TEST_CASE("build molluzzo reaches theta") {
  for (long d : {2L, 3L, 4L, 6L, 8L, 9L, 12L}) {
    for (long e = 1; e <= d; ++e) {
      if (d % e != 0 || e > 6) continue;
      ThetaValue th = theta(e, d);
      Construction c = build(recipe::Molluzzo{e, d / e, th.t});
      REQUIRE(c.identity);
      CHECK(c.term_count == static_cast<std::size_t>(th.value));
      CHECK(honest(c.identity->forms()).honest);
      CHECK(verify_identity(*c.identity).pass);
    }
  }
  CHECK_THROWS_AS(build(recipe::Molluzzo{0, 1, 1}), PreconditionError);
}

TEST_CASE("quadrature family verifies numerically") {
  for (long s = 1; s <= 6; ++s) {
    for (std::complex<double> th : {std::complex<double>(0, 0), std::complex<double>(0.37, 0), std::complex<double>(0.2, 0.3)}) {
      Construction c = build(recipe::Quadrature{s, th});
      REQUIRE(c.numeric);
      CHECK(c.numeric->pass);
      CHECK(c.numeric->max_residual < kQuadratureTolerance);
      CHECK(c.term_count == static_cast<std::size_t>(s + 2));
    }
  }
}

TEST_CASE("icosa_special") {
  IcosaSpecial ic = icosa_special();
  CHECK(ic.divisible_by_one_plus_alpha_sq);
  CHECK_FALSE(ic.a.coeff(0) == Rational(0));
  CHECK((ic.a % QPoly(std::vector<Rational>{1, 0, 1})).zero());
  CHECK((ic.b % QPoly(std::vector<Rational>{1, 0, 1})).zero());
  CHECK(ic.specialized.terms.back().lambda == Scalar(15625L));
  CHECK(verify_identity(ic.specialized).pass);
  Construction c = build(recipe::Icosa14{});
  CHECK(c.term_count == 6);
  CHECK(c.identity->terms.back().lambda == Scalar(78125L));
  CHECK(verify_identity(*c.identity).pass);
}

TEST_CASE("catalog entries all verify") {
  std::vector<std::string> names = catalog_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(names.size() >= 22);
  for (const auto& n : names) {
    CAPTURE(n);
    const CatalogEntry& e = catalog_entry(n);
    EntryCheck ch = check_entry(e);
    CHECK(ch.identity);
    CHECK(ch.related);
    CHECK(ch.value);
    CHECK(ch.cousin);
    CHECK(honest(e.identity.forms()).honest);
    CHECK_FALSE(e.description.empty());
  }
  try {
    catalog("no-such-identity");
    FAIL("expected an error");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("pythagorean") != std::string::npos);
  }
  CHECK(build(recipe::Catalog{"quartic13"}).term_count == 4);
}

TEST_CASE("catalog fixtures") {
  const CatalogEntry& q13 = catalog_entry("quartic13");
  REQUIRE(q13.value);
  CHECK(*q13.value == (BinaryForm::monomial(Scalar(1L), 6, 0) - BinaryForm::monomial(Scalar(1L), 6, 6)) *
                          BinaryForm::monomial(Scalar(8L) * sqrt_rational(3), 2, 1));

  FormSet quartics = catalog("quarcube").forms();
  CHECK_FALSE(power_kernel(quartics, 1).dependent());
  CHECK(power_kernel(quartics, 3).kernel.size() == 1);

  for (const Rational& a : {Rational(2), Rational(3), Rational(-1, 2), Rational(5, 7)}) {
    CHECK(check_entry(threefold(Scalar(a))).pass());
    CHECK(check_entry(threefold_real(Scalar(a))).pass());
  }
  CHECK_THROWS_AS(threefold(Scalar(1L)), PreconditionError);
  CHECK_THROWS_AS(threefold(Scalar(-1L)), PreconditionError);
  CHECK_THROWS_AS(threefold_real(Scalar(0L)), PreconditionError);

  // alpha = i and (x, y) -> (zeta_8^3 x, zeta_8^5 y) on the first line gives the cubic identity
  CatalogEntry at_i = threefold(P("i"));
  LinearChange m{Scalar::zeta(8, 3), Scalar(0L), Scalar(0L), Scalar::zeta(8, 5)};
  CHECK(proportional(compose(left_value(at_i.identity), m), *catalog_entry("cubic").value));

  const CatalogEntry& p = catalog_entry("pythagorean");
  CHECK(p.identity.terms.size() == 3);
  CHECK(p.identity.to_string().find(" = ") != std::string::npos);
}
