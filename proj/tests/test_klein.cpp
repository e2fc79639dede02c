#include <doctest.h>

#include <cmath>
#include <random>

#include "quadpow/constructions.hpp"
#include "quadpow/expr.hpp"
#include "quadpow/klein.hpp"
#include "support.hpp"

using namespace quadpow;
using quadpow::testing::random_nonzero_rational;
using quadpow::testing::random_rational;

namespace {

Scalar P(const char* s) { return parse_scalar(s); }

double norm(const KleinPoint& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

// Greedy nearest matching; worst distance, or infinity on size mismatch.
double multiset_distance(const std::vector<KleinPoint>& a, std::vector<KleinPoint> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (const auto& p : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](const KleinPoint& u, const KleinPoint& v) {
      return chordal_distance(p, u) < chordal_distance(p, v);
    });
    worst = std::max(worst, chordal_distance(p, *it));
    b.erase(it);
  }
  return worst;
}

std::vector<KleinPoint> points_of(const std::vector<ProjectiveRoot>& roots) {
  std::vector<KleinPoint> out;
  for (const auto& r : roots) out.push_back(klein_point(r));
  return out;
}

KleinPoint random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  KleinPoint p{g(rng), g(rng), g(rng)};
  const double n = norm(p);
  for (auto& c : p) c /= n;
  return p;
}

}  // namespace

TEST_CASE("roots of small forms") {
  auto r = roots_of_form(quadratic(Scalar(1L), Scalar(0L), Scalar(-1L)));
  REQUIRE(r.size() == 2);
  CHECK(multiset_distance(points_of(r), {klein_point(ProjectiveRoot::finite(1.0)), klein_point(ProjectiveRoot::finite(-1.0))}) < 1e-15);

  r = roots_of_form(quadratic(Scalar(0L), Scalar(2L), Scalar(0L)));
  REQUIRE(r.size() == 2);
  CHECK(r[0].infinite);
  CHECK_FALSE(r[1].infinite);
  CHECK(std::abs(r[1].z) == 0.0);

  r = roots_of_form(quadratic(Scalar(1L), Scalar(0L), Scalar(1L)));
  REQUIRE(r.size() == 2);
  const std::vector<KleinPoint> pm_i{{0, 1, 0}, {0, -1, 0}};
  CHECK(multiset_distance(points_of(r), pm_i) < 1e-15);

  CHECK_THROWS_AS(roots_of_form(BinaryForm(3)), PreconditionError);
}

TEST_CASE("the linear factor y is the point at infinity and x is zero") {
  auto r = roots_of_form(BinaryForm::linear(Scalar(0L), Scalar(1L)));
  REQUIRE(r.size() == 1);
  CHECK(r[0].infinite);
  CHECK(klein_point(r[0]) == KleinPoint{0, 0, 1});
  r = roots_of_form(BinaryForm::linear(Scalar(1L), Scalar(0L)));
  REQUIRE(r.size() == 1);
  CHECK(klein_point(r[0]) == KleinPoint{0, 0, -1});
  // 3x - 5y has root 5/3
  r = roots_of_form(BinaryForm::linear(Scalar(3L), Scalar(-5L)));
  CHECK(std::abs(r[0].z - std::complex<double>(5.0 / 3.0)) < 1e-15);
}

TEST_CASE("higher degree roots carry multiplicity and tight error bounds") {
  const BinaryForm l1 = BinaryForm::linear(Scalar(1L), Scalar(-1L));
  const BinaryForm l2 = BinaryForm::linear(Scalar(1L), Scalar(2L));
  const BinaryForm f = l1 * l1 * l1 * l2 * BinaryForm::linear(Scalar(0L), Scalar(1L));
  const auto r = roots_of_form(f);
  REQUIRE(r.size() == 5);
  int ones = 0, twos = 0, inf = 0;
  for (const auto& x : r) {
    if (x.infinite) {
      ++inf;
      continue;
    }
    if (std::abs(x.z - 1.0) < 1e-30) ++ones;
    if (std::abs(x.z + 2.0) < 1e-30) ++twos;
  }
  CHECK(ones == 3);
  CHECK(twos == 1);
  CHECK(inf == 1);

  // x^5 - 3 y^5: companion matrix path
  BinaryForm g(5);
  g.coeff(0) = Scalar(1L);
  g.coeff(5) = Scalar(-3L);
  const auto rg = roots_of_form(g, 200);
  REQUIRE(rg.size() == 5);
  const double rad = std::pow(3.0, 0.2);
  for (const auto& x : rg) {
    CHECK(std::abs(std::abs(x.z) - rad) < 1e-14);
    CHECK(x.error_bound < 1e-50);
    CHECK(std::abs(std::pow(x.z, 5) - 3.0) < 1e-12);
  }
}

TEST_CASE("companion route agrees with the quadratic formula") {
  const PowerIdentity id = catalog("icosa14");
  BinaryForm prod = BinaryForm::monomial(Scalar(1L), 0, 0);
  std::vector<ProjectiveRoot> separate;
  for (const auto& f : id.forms()) {
    prod = prod * f;
    for (const auto& r : roots_of_form(f)) separate.push_back(r);
  }
  const auto together = roots_of_form(prod);
  CHECK(multiset_distance(points_of(together), points_of(separate)) < 1e-12);
}

TEST_CASE("catalog Klein points are unit vectors") {
  for (const auto& name : catalog_names())
    for (const auto& p : klein_set(catalog(name))) CHECK(std::abs(norm(p) - 1) <= 1e-12);
}

TEST_CASE("Pythagorean product gives the octahedron") {
  const auto pts = klein_set(catalog("pythagorean"));
  CHECK(multiset_distance(pts, octahedron_vertices()) < 1e-9);
  const KleinLabel l = recognize(pts);
  CHECK(l.shape == KleinShape::Octahedron);
  CHECK(l.to_string() == "octahedron");
}

TEST_CASE("quintic summands give the cube") {
  const double a = std::sqrt(2.0) / std::sqrt(3.0), b = 1 / std::sqrt(3.0);
  std::vector<KleinPoint> cube;
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      cube.push_back({s * a, 0, t * b});
      cube.push_back({0, s * a, t * b});
    }
  const auto pts = klein_set(catalog("quintic"));
  CHECK(multiset_distance(pts, cube) < 1e-9);
  CHECK(recognize(pts).shape == KleinShape::Cube);
}

TEST_CASE("icosahedral identity gives the icosahedron") {
  const auto pts = klein_set(catalog("icosa14"));
  REQUIRE(pts.size() == 12);
  CHECK(recognize(pts).shape == KleinShape::Icosahedron);
  int up = 0, down = 0, poles = 0;
  const double h = 1 / std::sqrt(5.0);
  for (const auto& p : pts) {
    if (std::abs(std::abs(p[2]) - 1) < 1e-9) ++poles;
    if (std::abs(p[2] - h) < 1e-9) ++up;
    if (std::abs(p[2] + h) < 1e-9) ++down;
  }
  CHECK(poles == 2);
  CHECK(up == 5);
  CHECK(down == 5);
  CHECK(recognize(klein_set(catalog("icosa_triangles"))).shape == KleinShape::Icosahedron);
  CHECK(recognize(klein_set(catalog("icosa_coordinates"))).shape == KleinShape::Icosahedron);
}

TEST_CASE("quartic gives an equatorial hexagon with poles") {
  const KleinLabel l = recognize(klein_set(catalog("quartic")));
  CHECK(l.shape == KleinShape::PrismWithPoles);
  CHECK(l.m == 6);
  CHECK(l.to_string() == "6-gon-prism-with-poles");
}

TEST_CASE("quintic synching gives a rotated cube") {
  const auto pts = klein_set(catalog("quintic_synch"));
  const KleinLabel l = recognize(pts, 1e-6);
  CHECK(l.shape == KleinShape::Cube);
  CHECK(l.residual < 1e-6);
  int third = 0;
  for (const auto& p : pts)
    if (std::abs(std::abs(p[2]) - 1.0 / 3) < 1e-9) ++third;
  CHECK(third == 6);
}

TEST_CASE("recognize rejects generic and out of range input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<KleinPoint> pts;
    for (int k = 0; k < 12; ++k) pts.push_back(random_unit(rng));
    CHECK(recognize(pts).shape == KleinShape::Unknown);
  }
  CHECK(recognize({{0, 0, 1}, {0, 0, -1}, {1, 0, 0}}).shape == KleinShape::Unknown);
  // an antiprism is not a prism
  auto twisted = icosahedron_vertices();
  CHECK(recognize(twisted).shape == KleinShape::Icosahedron);
  twisted.pop_back();
  CHECK(recognize(twisted).shape == KleinShape::Unknown);
}

TEST_CASE("recognition is rotation invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const KleinPoint u = random_unit(rng);
    const double t = std::uniform_real_distribution<double>(0, 6.28)(rng);
    // Rodrigues rotation about u by t
    auto rot = [&](const KleinPoint& v) {
      const double c = std::cos(t), s = std::sin(t);
      const double d = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
      const KleinPoint x{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      KleinPoint r{};
      for (int i = 0; i < 3; ++i) r[i] = v[i] * c + x[i] * s + u[i] * d * (1 - c);
      return r;
    };
    for (auto shape : {KleinShape::Octahedron, KleinShape::Cube, KleinShape::Icosahedron}) {
      auto ref = shape == KleinShape::Octahedron ? octahedron_vertices()
                 : shape == KleinShape::Cube     ? cube_vertices()
                                                 : icosahedron_vertices();
      for (auto& p : ref) p = rot(p);
      CHECK(recognize(ref).shape == shape);
    }
  }
}

TEST_CASE("Mobius transforms of linear changes") {
  const MobiusTransform id = mobius_of_change(LinearChange::identity());
  CHECK(id.alpha == std::complex<double>(1));
  CHECK(id.beta == std::complex<double>(0));
  CHECK(id.gamma == std::complex<double>(0));
  CHECK(id.delta == std::complex<double>(1));

  const MobiusTransform sc = mobius_of_change({Scalar(1L), Scalar(0L), Scalar(0L), Scalar(Rational(7, 3))});
  for (auto z : {std::complex<double>(1, 2), std::complex<double>(-0.5, 0.25)})
    CHECK(std::abs(sc(ProjectiveRoot::finite(z)).z - z * (7.0 / 3.0)) < 1e-14);
  CHECK(sc(ProjectiveRoot::at_infinity()).infinite);

  CHECK_THROWS_AS(mobius_of_change({Scalar(1L), Scalar(2L), Scalar(2L), Scalar(4L)}), PreconditionError);
}

TEST_CASE("the second rotation change acts as (a, b, c) -> (a, c, -b)") {
  const Scalar s = P("sqrt(2)").inverse();
  const LinearChange m2{s, P("i") * s, P("i") * s, s};
  const MobiusTransform t = mobius_of_change(m2);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const ProjectiveRoot z = ProjectiveRoot::finite({g(rng), g(rng)});
    const KleinPoint p = klein_point(z), q = klein_point(t(z));
    CHECK(chordal_distance(q, {p[0], p[2], -p[1]}) < 1e-12);
  }
  // and on actual roots of a transformed form
  const BinaryForm f = catalog("pythagorean").forms()[0];
  std::vector<KleinPoint> want;
  for (const auto& p : points_of(roots_of_form(f))) want.push_back({p[0], p[2], -p[1]});
  CHECK(multiset_distance(points_of(roots_of_form(compose(f, m2))), want) < 1e-12);
}

TEST_CASE("Mobius consistency on random quadratics") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryForm f = quadratic(Scalar(random_rational(rng, 9)), Scalar(random_rational(rng, 9)),
                                   Scalar(random_rational(rng, 9)));
    if (f.zero()) continue;
    LinearChange m;
    do {
      m = {Scalar(random_rational(rng, 6)), Scalar(random_rational(rng, 6)), Scalar(random_rational(rng, 6)),
           Scalar(random_rational(rng, 6))};
    } while (!m.invertible());
    const MobiusTransform t = mobius_of_change(m);
    std::vector<KleinPoint> mapped;
    for (const auto& r : roots_of_form(f)) mapped.push_back(klein_point(t(r)));
    CHECK(multiset_distance(points_of(roots_of_form(compose(f, m))), mapped) < 1e-8);
  }
}

TEST_CASE("Klein sets are unchanged by scaling forms") {
  std::mt19937_64 rng(5);
  for (const char* name : {"quintic", "icosa14", "sextic_synch"}) {
    const FormSet forms = catalog(name).forms();
    FormSet scaled;
    for (const auto& f : forms) scaled.push_back(f.scaled(Scalar(random_nonzero_rational(rng, 20, 7)) * P("zeta(12,5)")));
    CHECK(multiset_distance(klein_set(forms), klein_set(scaled)) < 1e-12);
  }
}
