#include <doctest.h>

#include <random>

#include "quadpow/expr.hpp"
#include "quadpow/sylvester.hpp"
#include "support.hpp"

using namespace quadpow;
using quadpow::testing::random_rational;
using quadpow::testing::random_scalar;

namespace {

Scalar P(const char* s) { return parse_scalar(s); }

BinaryForm even_form(const std::vector<long>& c) {
  BinaryForm f(static_cast<int>(2 * (c.size() - 1)));
  for (std::size_t j = 0; j < c.size(); ++j) f.coeff(static_cast<int>(2 * j)) = Scalar(c[j]);
  return f;
}

BinaryForm Q(const Scalar& a, const Scalar& b, const Scalar& c) { return quadratic(a, b, c); }

// the two summands mu_i g_i^d coincide with the expected pair in some order
bool terms_match(const TwoPowerDecomposition& dec, const BinaryForm& t1, const BinaryForm& t2) {
  BinaryForm e1 = form_power(dec.g1, dec.d).scaled(dec.mu1), e2 = form_power(dec.g2, dec.d).scaled(dec.mu2);
  return (e1 == t1 && e2 == t2) || (e1 == t2 && e2 == t1);
}

}  // namespace

TEST_CASE("sylvester_matrix examples") {
  for (long b : {1L, -3L}) {
    BinaryForm p = form_power(Q(Scalar(1L), Scalar(0L), Scalar(1L)), 4) + BinaryForm::monomial(Scalar(6 * b), 8, 4);
    SylvesterReport rep = sylvester_matrix(p);
    REQUIRE(rep.matrix.size() == 3);
    if (b == 1) {
      CHECK(rep.matrix[0] == std::vector<Scalar>{Scalar(1L), Scalar(1L), Scalar(2L)});
      CHECK(rep.matrix[1] == std::vector<Scalar>{Scalar(1L), Scalar(2L), Scalar(1L)});
      CHECK(rep.matrix[2] == std::vector<Scalar>{Scalar(2L), Scalar(1L), Scalar(1L)});
      CHECK(rep.rank == 3);
    } else {
      CHECK(rep.rank == 2);
    }
  }
  SylvesterReport cubes = sylvester_matrix(even_form({1, 0, 0, 1}));
  CHECK(cubes.rank == 2);
  REQUIRE(cubes.kernel.size() == 1);
  CHECK(cubes.kernel[0] == KernelQuadratic{Scalar(0L), Scalar(1L), Scalar(0L)});
  CHECK_THROWS_AS(sylvester_matrix(Q(Scalar(1L), Scalar(1L), Scalar(1L)).pow(3)), PreconditionError);
  CHECK_THROWS_AS(sylvester_matrix(even_form({1, 0, 1})), PreconditionError);
}

TEST_CASE("two_power_decompose examples") {
  const Scalar w = P("omega"), w2 = P("omega^2");
  auto oct = two_power_decompose(even_form({1, 4, -12, 4, 1}));
  REQUIRE(oct.size() == 1);
  CHECK(oct[0].kind == DecompositionKind::Generic);
  CHECK(terms_match(oct[0], -form_power(Q(w, Scalar(0L), w2), 4), -form_power(Q(w2, Scalar(0L), w), 4)));
  CHECK(oct[0].expand() == form_power(Q(Scalar(1L), Scalar(0L), Scalar(1L)), 4) - BinaryForm::monomial(Scalar(18L), 8, 4));

  BinaryForm q1 = even_form({-1, -14, -42, -14, -1});
  CHECK(two_power_decompose(q1).empty());
  CHECK(sylvester_matrix(q1).rank == 3);

  const Scalar r3 = sqrt_rational(-3);
  BinaryForm q2 = even_form({1, -14, 0, 14, -1}).scaled(r3);
  auto d2 = two_power_decompose(q2);
  REQUIRE(d2.size() == 1);
  const Scalar alpha = (Scalar(2L) + r3) * Scalar(Rational(1, 2)), beta = (Scalar(2L) - r3) * Scalar(Rational(1, 2));
  CHECK(terms_match(d2[0], form_power(Q(alpha, Scalar(0L), -beta), 4), -form_power(Q(beta, Scalar(0L), -alpha), 4)));

  auto x8y8 = two_power_decompose(even_form({1, 0, 0, 0, 1}));
  REQUIRE(x8y8.size() == 1);
  CHECK(x8y8[0].kind == DecompositionKind::EllDegenerate);
  CHECK(terms_match(x8y8[0], BinaryForm::monomial(Scalar(1L), 8, 0), BinaryForm::monomial(Scalar(1L), 8, 8)));
}

TEST_CASE("enumerate_even_representations fixtures") {
  const Scalar r2 = sqrt_rational(-2), r6 = sqrt_rational(-6), one(1L);
  EvenRepresentations dec = enumerate_even_representations(even_form({2, -150, 180, 180, -150, 2}), 5);
  REQUIRE(dec.decompositions.size() == 1);
  CHECK(terms_match(dec.decompositions[0], form_power(Q(one - r2, Scalar(0L), one + r2), 5),
                    form_power(Q(one + r2, Scalar(0L), one - r2), 5)));

  EvenRepresentations oct = enumerate_even_representations(even_form({2, -280, 588, -280, 2}), 4);
  REQUIRE(oct.decompositions.size() == 1);
  CHECK(terms_match(oct.decompositions[0], form_power(Q(one + r6, Scalar(0L), one - r6), 4),
                    form_power(Q(one - r6, Scalar(0L), one + r6), 4)));

  for (const auto& c : {std::vector<long>{1, 4, -12, 4, 1}, std::vector<long>{1, -68, 6, -68, 1}, std::vector<long>{1, -140, 294, -140, 1}})
    CHECK(enumerate_even_representations(even_form(c), 4).decompositions.size() == 1);

  EvenRepresentations tame = enumerate_even_representations(even_form({2, -136, 12, -136, 2}), 4);
  REQUIRE(tame.decompositions.size() == 1);
  CHECK(terms_match(tame.decompositions[0], -form_power(Q(Scalar(2L), Scalar(0L), Scalar(2L)), 4),
                    form_power(Q(Scalar(1L), Scalar(0L), Scalar(-1L)), 4).scaled(Scalar(18L))));

  EvenRepresentations fam = enumerate_even_representations(even_form({1, 3, 3, 1}), 3);
  CHECK(fam.family);
  CHECK(fam.family_dimension == 2);
  CHECK(fam.decompositions.empty());
}

TEST_CASE("the two wild quintics have no even representation") {
  const Scalar i = P("i"), s2 = sqrt_rational(2);
  BinaryForm plus = form_power(Q(Scalar(1L), -i * s2, Scalar(1L)), 5) + form_power(Q(Scalar(1L), s2, Scalar(-1L)), 5).scaled(i);
  BinaryForm minus = form_power(Q(Scalar(1L), i * s2, Scalar(1L)), 5) - form_power(Q(Scalar(1L), s2, Scalar(-1L)), 5).scaled(i);
  BinaryForm plus_expected(std::vector<Scalar>{Scalar(1L), Scalar(0L), Scalar(15L) * i, Scalar(0L), Scalar(-30L), Scalar(0L),
                                               Scalar(30L) * i, Scalar(0L), Scalar(-15L), Scalar(0L), -i});
  CHECK(plus == plus_expected.scaled(Scalar(1L) + i));
  CHECK(minus == plus.scale_y(i).scaled(-i));
  CHECK(two_power_decompose(plus).empty());
  CHECK(two_power_decompose(minus).empty());
}

TEST_CASE("round trip on 100 random even pairs") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const long d = 3 + trial % 3;
    BinaryForm g1 = Q(Scalar(random_rational(rng, 6)), Scalar(0L), Scalar(random_rational(rng, 6)));
    BinaryForm g2 = Q(Scalar(random_rational(rng, 6)), Scalar(0L), Scalar(random_rational(rng, 6)));
    if (g1.zero() || g2.zero() || !honest({g1, g2}).honest) continue;
    BinaryForm p = form_power(g1, d) + form_power(g2, d);
    auto decs = two_power_decompose(p);
    REQUIRE(decs.size() == 1);
    REQUIRE(decs[0].expand() == p);
    REQUIRE(sylvester_matrix(p).rank <= 2);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("simultaneous_diagonalize examples") {
  DiagonalizationResult id = simultaneous_diagonalize(Q(Scalar(1L), Scalar(0L), Scalar(1L)), Q(Scalar(3L), Scalar(0L), Scalar(-1L)));
  CHECK(id.m == LinearChange::identity());

  const Scalar i = P("i");
  DiagonalizationResult r = simultaneous_diagonalize(Q(Scalar(1L), Scalar(0L), Scalar(-1L)), Q(Scalar(0L), Scalar(2L), Scalar(0L)));
  CHECK(is_even(r.g1));
  CHECK(is_even(r.g2));
  CHECK(r.m.a == Scalar(1L));
  CHECK(r.m.b == Scalar(1L));
  CHECK(((r.m.c == i && r.m.d == -i) || (r.m.c == -i && r.m.d == i)));

  BinaryForm f1 = Q(Scalar(1L), Scalar(1L), Scalar(-1L)), f2 = Q(Scalar(1L), Scalar(-1L), Scalar(-1L));
  DiagonalizationResult c = simultaneous_diagonalize(f1, f2);
  CHECK(is_even(c.g1));
  CHECK(is_even(c.g2));
  BinaryForm rhs = form_power(BinaryForm::monomial(Scalar(1L), 2, 0), 3).scaled(Scalar(2L)) +
                   form_power(BinaryForm::monomial(Scalar(-1L), 2, 2), 3).scaled(Scalar(2L));
  CHECK(form_power(c.g1, 3) + form_power(c.g2, 3) == compose(rhs, c.m));
  CHECK(is_even(compose(rhs, c.m)));

  CHECK_THROWS_AS(simultaneous_diagonalize(Q(Scalar(1L), Scalar(1L), Scalar(0L)), Q(Scalar(0L), Scalar(1L), Scalar(1L))),
                  PreconditionError);
}

TEST_CASE("simultaneous_diagonalize on 200 random coprime pairs") {
  std::mt19937_64 rng(21);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BinaryForm f1, f2;
    if (trial % 10 == 0) {
      f1 = Q(random_scalar(rng, 3), random_scalar(rng, 3), random_scalar(rng, 3));
      f2 = Q(Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)));
    } else {
      f1 = Q(Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)));
      f2 = Q(Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)), Scalar(random_rational(rng, 5)));
    }
    if (f1.zero() || f2.zero() || quad_gcd(f1, f2).degree != 0) continue;
    DiagonalizationResult r = simultaneous_diagonalize(f1, f2);
    REQUIRE(r.g1.coeff(1).zero());
    REQUIRE(r.g2.coeff(1).zero());
    REQUIRE(r.m.invertible());
    REQUIRE(r.g1 == compose(f1, r.m));
    ++done;
  }
  CHECK(done > 150);
}
