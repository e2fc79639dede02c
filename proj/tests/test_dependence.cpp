#include <doctest.h>

#include <random>
#include <set>

#include "quadpow/dependence.hpp"
#include "quadpow/expr.hpp"
#include "support.hpp"

using namespace quadpow;
using quadpow::testing::random_nonzero_rational;
using quadpow::testing::random_rational;
using quadpow::testing::random_scalar;

namespace {

Scalar P(const char* s) { return parse_scalar(s); }

FormSet quartic_forms() {
  return {quadratic(Scalar(1L), Scalar(0L), Scalar(1L)), quadratic(P("omega"), Scalar(0L), P("omega^2")),
          quadratic(P("omega^2"), Scalar(0L), P("omega")), quadratic(Scalar(0L), Scalar(1L), Scalar(0L))};
}

// (-1)^k (i^k x^2 + sqrt(-2) xy + i^-k y^2), k = 0..3
FormSet quintic_forms() {
  FormSet out;
  for (long k = 0; k < 4; ++k) {
    BinaryForm f = quadratic(Scalar::zeta(4, k), sqrt_rational(-2), Scalar::zeta(4, -k));
    out.push_back(k % 2 ? -f : f);
  }
  return out;
}

bool same_up_to_scale_and_order(const FormSet& a, const FormSet& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && proportional(f, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

BinaryForm random_rational_form(std::mt19937_64& rng, int k, long range) {
  std::vector<Scalar> c;
  for (int i = 0; i <= k; ++i) c.push_back(Scalar(random_rational(rng, range)));
  return BinaryForm(std::move(c));
}

}  // namespace

TEST_CASE("power_kernel examples") {
  DependenceReport rep = power_kernel(quartic_forms(), 4);
  REQUIRE(rep.kernel.size() == 1);
  CHECK(rep.rank == 3);
  CHECK(rep.kernel[0] == std::vector<Scalar>{Scalar(1L), Scalar(1L), Scalar(1L), Scalar(-18L)});

  DependenceReport ind = power_kernel({BinaryForm::monomial(Scalar(1L), 2, 0), BinaryForm::monomial(Scalar(1L), 2, 2)}, 2);
  CHECK_FALSE(ind.dependent());
  CHECK(ind.rank == 2);

  for (long d = 1; d <= 6; ++d) {
    FormSet lin;
    for (long j = 1; j <= d + 2; ++j) lin.push_back(BinaryForm::linear(Scalar(1L), Scalar(j)));
    CHECK(power_kernel(lin, d).kernel.size() == 1);
  }
  CHECK_THROWS_AS(power_kernel({quadratic(Scalar(1L), Scalar(0L), Scalar(0L)), quadratic(Scalar(2L), Scalar(0L), Scalar(0L))}, 3),
                  PreconditionError);
}

TEST_CASE("verify_identity examples") {
  PowerIdentity seven;
  seven.d = 7;
  for (long k = 0; k < 4; ++k)
    seven.terms.push_back({Scalar(1L), quadratic(Scalar::zeta(4, -k), sqrt_rational(Rational(-6, 5)), Scalar::zeta(4, k))});
  seven.terms.push_back({Scalar(26L) * sqrt_rational(3), quadratic(Scalar(0L), sqrt_rational(Rational(-8, 5)), Scalar(0L)), Side::Right});
  CHECK(verify_identity(seven).pass);

  PowerIdentity seven_real = seven;
  seven_real.terms.back().form = quadratic(Scalar(0L), -sqrt_rational(Rational(8, 5)), Scalar(0L));
  CHECK_FALSE(verify_identity(seven_real).pass);

  const Scalar phi = P("phi");
  PowerIdentity icosa;
  icosa.d = 14;
  for (long k = 0; k < 3; ++k) {
    icosa.terms.push_back({Scalar(1L), quadratic(Scalar::zeta(3, k), phi * phi, -Scalar::zeta(3, -k))});
    icosa.terms.push_back({Scalar(1L), quadratic(Scalar::zeta(3, k) * phi, -phi.inverse(), -Scalar::zeta(3, -k) * phi)});
  }
  CHECK(verify_identity(icosa).pass);

  PowerIdentity pyt = make_identity(2, {Scalar(1L), Scalar(1L), Scalar(-1L)},
                                    {quadratic(Scalar(1L), Scalar(0L), Scalar(-1L)), quadratic(Scalar(0L), Scalar(3L), Scalar(0L)),
                                     quadratic(Scalar(1L), Scalar(0L), Scalar(1L))});
  VerifyResult bad = verify_identity(pyt);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.residual.has_value());
  CHECK(*bad.residual == BinaryForm::monomial(Scalar(5L), 4, 2));
}

TEST_CASE("flip") {
  FormSet q = quintic_forms();
  PowerIdentity id = make_identity(5, {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(1L)}, q);
  REQUIRE(verify_identity(id).pass);
  PowerIdentity f = flip(id, {1, 3});
  CHECK(verify_identity(f).pass);
  CHECK(f.terms[1].lambda == Scalar(-1L));
  CHECK(f.terms[1].side == Side::Right);
  CHECK(f.terms[0].form == quadratic(Scalar(1L), sqrt_rational(-2), Scalar(1L)));
  CHECK(f.terms[2].form == quadratic(Scalar(-1L), sqrt_rational(-2), Scalar(-1L)));
  PowerIdentity back = flip(f, {1, 3});
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(back.terms[j].lambda == id.terms[j].lambda);
    CHECK(back.terms[j].side == id.terms[j].side);
  }
  CHECK(f.to_string().find(" = (-1)*(") != std::string::npos);

  PowerIdentity pyt = make_identity(2, {Scalar(1L), Scalar(1L), Scalar(-1L)},
                                    {quadratic(Scalar(1L), Scalar(0L), Scalar(-1L)), quadratic(Scalar(0L), Scalar(2L), Scalar(0L)),
                                     quadratic(Scalar(1L), Scalar(0L), Scalar(1L))});
  CHECK(verify_identity(flip(pyt, {2})).pass);
  CHECK(verify_identity(flip(pyt, {0, 1, 2})).pass);
  CHECK(verify_identity(flip(pyt, {})).pass);
  CHECK_THROWS_AS(flip(pyt, {5}), PreconditionError);
}

TEST_CASE("cousin_apply") {
  PowerIdentity id = make_identity(4, {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(-18L)}, quartic_forms());
  REQUIRE(verify_identity(id).pass);
  PowerIdentity same = cousin_apply(id, {0, 1, 2, 3}, std::vector<Scalar>(4, Scalar(1L)), LinearChange::identity());
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(same.terms[j].form == id.terms[j].form);
    CHECK(same.terms[j].lambda == id.terms[j].lambda);
  }

  const Scalar i = P("i"), w = P("omega");
  LinearChange m{i, -i * w, Scalar(1L), -w * w};
  const Scalar c = sqrt_rational(-3).inverse();
  PowerIdentity cous = cousin_apply(id, {0, 1, 2, 3}, std::vector<Scalar>(4, c), m);
  CHECK(verify_identity(cous).pass);
  FormSet quarcous{quadratic(Scalar(1L), Scalar(2L), Scalar(0L)), quadratic(Scalar(0L), Scalar(2L), Scalar(1L)),
                   quadratic(Scalar(1L), Scalar(0L), Scalar(-1L)), quadratic(Scalar(1L), Scalar(1L), Scalar(1L))};
  CHECK(same_up_to_scale_and_order(cous.forms(), quarcous));
  PowerIdentity direct = make_identity(4, {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(-2L)}, quarcous);
  CHECK(verify_identity(direct).pass);

  PowerIdentity perm = cousin_apply(id, {3, 2, 0, 1}, {Scalar(2L), P("i"), P("sqrt(5)"), Scalar(-1L)}, m);
  CHECK(verify_identity(perm).pass);
  CHECK_THROWS_AS(cousin_apply(id, {0, 0, 1, 2}, std::vector<Scalar>(4, Scalar(1L)), m), PreconditionError);
  CHECK_THROWS_AS(cousin_apply(id, {0, 1, 2, 3}, std::vector<Scalar>(4, Scalar(1L)), {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(1L)}),
                  PreconditionError);
}

TEST_CASE("power_sum_check") {
  FormSet h;
  for (long j = 0; j < 5; ++j)
    h.push_back(form_power(quadratic(Scalar::zeta(5, j), P("i"), Scalar::zeta(5, -j)), 2));
  h.push_back(BinaryForm::monomial(Scalar(-5L), 4, 2));
  for (const auto& s : power_sum_check(h, {1, 2, 4, 7})) CHECK(s.zero);
  auto sums = power_sum_check(h, {3});
  CHECK_FALSE(sums[0].zero);

  auto single = power_sum_check({quadratic(Scalar(1L), Scalar(0L), Scalar(0L))}, {1});
  CHECK_FALSE(single[0].zero);

  for (const auto& s : power_sum_check(quintic_forms(), {1, 2, 5})) CHECK(s.zero);
}

TEST_CASE("random forms are independent when r <= kd + 1") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 3;
    const long d = 2 + trial % 4;
    const long maxr = std::min<long>(k * d + 1, 7);
    const long r = std::uniform_int_distribution<long>(2, maxr)(rng);
    FormSet s;
    for (long j = 0; j < r; ++j) s.push_back(random_rational_form(rng, k, 100));
    if (!honest(s).honest) continue;
    DependenceReport rep = power_kernel(s, d);
    REQUIRE_FALSE(rep.dependent());
    REQUIRE(rep.rank == static_cast<std::size_t>(r));
  }
}

TEST_CASE("Vandermonde: d+1 linear forms independent, d+2 dependent with one relation") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    const long d = 1 + trial % 6;
    std::set<Rational> slopes;
    while (static_cast<long>(slopes.size()) < d + 2) slopes.insert(random_rational(rng, 40, 7));
    FormSet lin;
    for (const auto& s : slopes) lin.push_back(BinaryForm::linear(Scalar(random_nonzero_rational(rng, 9)), Scalar(s) * Scalar(random_nonzero_rational(rng, 9))));
    if (!honest(lin).honest) continue;
    FormSet first(lin.begin(), lin.end() - 1);
    REQUIRE_FALSE(power_kernel(first, d).dependent());
    REQUIRE(power_kernel(lin, d).kernel.size() == 1);
  }
}

TEST_CASE("cousin_apply preserves kernel dimension") {
  std::mt19937_64 rng(99);
  PowerIdentity id = make_identity(5, {Scalar(1L), Scalar(1L), Scalar(1L), Scalar(1L)}, quintic_forms());
  const std::size_t dim = power_kernel(id.forms(), 5).kernel.size();
  for (int trial = 0; trial < 20; ++trial) {
    LinearChange m{random_scalar(rng, 2), random_scalar(rng, 2), random_scalar(rng, 2), random_scalar(rng, 2)};
    if (!m.invertible()) continue;
    std::vector<std::size_t> pi{0, 1, 2, 3};
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Scalar> c;
    for (int j = 0; j < 4; ++j) c.push_back(Scalar(random_nonzero_rational(rng, 5)));
    PowerIdentity cous = cousin_apply(id, pi, c, m);
    REQUIRE(verify_identity(cous).pass);
    REQUIRE(power_kernel(cous.forms(), 5).kernel.size() == dim);
  }
}
