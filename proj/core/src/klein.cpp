#include "quadpow/klein.hpp"

#include <mpfr.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadpow/errors.hpp"
#include "quadpow/numeric.hpp"

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
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
  std::complex<double> value() const { return {re.d(), im.d()}; }
};

mpfr_prec_t prec_of(const Cx& a) { return mpfr_get_prec(a.re.get()); }

Cx cx_from(const ComplexApprox& c, mpfr_prec_t p) {
  Cx r(p);
  mpfr_set_str(r.re.get(), c.re.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(r.im.get(), c.im.c_str(), 10, MPFR_RNDN);
  return r;
}

Cx cx_from(std::complex<double> z, mpfr_prec_t p) {
  Cx r(p);
  mpfr_set_d(r.re.get(), z.real(), MPFR_RNDN);
  mpfr_set_d(r.im.get(), z.imag(), MPFR_RNDN);
  return r;
}

Cx cx_add(const Cx& a, const Cx& b) {
  Cx r(prec_of(a));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_sub(const Cx& a, const Cx& b) {
  Cx r(prec_of(a));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_mul(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = prec_of(a);
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
  Real r(prec_of(a));
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return r;
}

Cx cx_div(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = prec_of(a);
  Real den(p), t(p);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  if (mpfr_zero_p(den.get())) throw DivisionByZero();
  Cx conj = b;
  mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
  Cx r = cx_mul(a, conj);
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

Cx cx_scale(const Cx& a, long num, long den) {
  Cx r = a;
  mpfr_mul_si(r.re.get(), r.re.get(), num, MPFR_RNDN);
  mpfr_mul_si(r.im.get(), r.im.get(), num, MPFR_RNDN);
  mpfr_div_si(r.re.get(), r.re.get(), den, MPFR_RNDN);
  mpfr_div_si(r.im.get(), r.im.get(), den, MPFR_RNDN);
  return r;
}

Cx cx_sqrt(const Cx& a) {
  const mpfr_prec_t p = prec_of(a);
  Cx r(p);
  Real m = cx_abs(a), big(p);
  if (mpfr_zero_p(m.get())) return r;
  // big = sqrt((|a| + |re|) / 2), the other part is im / (2 big)
  mpfr_abs(big.get(), a.re.get(), MPFR_RNDN);
  mpfr_add(big.get(), big.get(), m.get(), MPFR_RNDN);
  mpfr_div_ui(big.get(), big.get(), 2, MPFR_RNDN);
  mpfr_sqrt(big.get(), big.get(), MPFR_RNDN);
  Real other(p);
  mpfr_div(other.get(), a.im.get(), big.get(), MPFR_RNDN);
  mpfr_div_ui(other.get(), other.get(), 2, MPFR_RNDN);
  if (mpfr_sgn(a.re.get()) >= 0) {
    r.re = big;
    r.im = other;
  } else {
    mpfr_abs(r.re.get(), other.get(), MPFR_RNDN);
    r.im = big;
    if (mpfr_sgn(a.im.get()) < 0) mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
  }
  return r;
}

std::string to_decimal(const Real& r, long precision) {
  const long digits = std::max(10L, static_cast<long>(static_cast<double>(precision) * 0.30103) + 1);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), r.get());
  return std::string(buf.data());
}

ProjectiveRoot make_root(const Cx& z, double err, long precision) {
  ProjectiveRoot r = ProjectiveRoot::finite(z.value(), err);
  r.re = to_decimal(z.re, precision);
  r.im = to_decimal(z.im, precision);
  return r;
}

using SPoly = Poly<Scalar>;

/// Yun's algorithm: factors with their multiplicities, all monic.
std::vector<std::pair<SPoly, int>> squarefree_factors(const SPoly& p) {
  std::vector<std::pair<SPoly, int>> out;
  if (p.degree() <= 0) return out;
  const SPoly f = p.monic();
  SPoly a = gcd(f, f.derivative());
  SPoly b = divmod(f, a).first;
  SPoly c = divmod(f.derivative(), a).first;
  SPoly dd = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, dd);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(dd, a).first;
    dd = c - b.derivative();
  }
  return out;
}

// q(z) and q'(z) by Horner.
std::pair<Cx, Cx> horner(const std::vector<Cx>& q, const Cx& z) {
  const mpfr_prec_t p = prec_of(z);
  Cx v(p), dv(p);
  for (std::size_t k = q.size(); k-- > 0;) {
    dv = cx_add(cx_mul(dv, z), v);
    v = cx_add(cx_mul(v, z), q[k]);
  }
  return {v, dv};
}

std::vector<ProjectiveRoot> squarefree_roots(const SPoly& q, long precision) {
  const int n = q.degree();
  const mpfr_prec_t wp = static_cast<mpfr_prec_t>(2 * precision + 32);
  std::vector<ProjectiveRoot> out;
  if (n == 1) {
    const ComplexApprox z = eval_complex(-q.coeff(0) / q.coeff(1), precision);
    ProjectiveRoot r = ProjectiveRoot::finite(z.value, z.error_bound);
    r.re = z.re;
    r.im = z.im;
    out.push_back(r);
    return out;
  }
  if (n == 2) {
    const Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    const Scalar disc = b * b - Scalar(4L) * a * c;
    const Cx s = cx_sqrt(cx_from(eval_complex(disc, 2 * precision), wp));
    const Cx bb = cx_from(eval_complex(b, 2 * precision), wp);
    const Cx two_a = cx_scale(cx_from(eval_complex(a, 2 * precision), wp), 2, 1);
    const double err = std::ldexp(1.0 + std::abs(bb.value()) + std::abs(s.value()), 4 - 2 * static_cast<int>(precision)) /
                       std::abs(two_a.value());
    Cx nb = bb;
    mpfr_neg(nb.re.get(), nb.re.get(), MPFR_RNDN);
    mpfr_neg(nb.im.get(), nb.im.get(), MPFR_RNDN);
    out.push_back(make_root(cx_div(cx_add(nb, s), two_a), err, precision));
    out.push_back(make_root(cx_div(cx_sub(nb, s), two_a), err, precision));
    return out;
  }
  std::vector<Cx> hq;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> lead = approx(q.coeff(static_cast<std::size_t>(n)));
  for (int k = 0; k <= n; ++k) {
    const ComplexApprox c = eval_complex(q.coeff(static_cast<std::size_t>(k)), 2 * precision);
    hq.push_back(cx_from(c, wp));
    if (k < n) comp(k, n - 1) = -c.value / lead;
  }
  for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw Error("companion eigenvalues did not converge");
  for (int k = 0; k < n; ++k) {
    Cx z = cx_from(es.eigenvalues()(k), wp);
    double err = 0;
    for (int it = 0; it < 64; ++it) {
      auto [v, dv] = horner(hq, z);
      if (mpfr_zero_p(v.re.get()) && mpfr_zero_p(v.im.get())) {
        err = 0;
        break;
      }
      const Cx step = cx_div(v, dv);
      z = cx_sub(z, step);
      const double st = cx_abs(step).d();
      err = n * st;
      if (st <= std::ldexp(1.0 + std::abs(z.value()), -2 * static_cast<int>(precision))) {
        auto [v2, dv2] = horner(hq, z);
        err = n * cx_abs(cx_div(v2, dv2)).d();
        break;
      }
    }
    err += std::ldexp(1.0 + std::abs(z.value()), -static_cast<int>(precision));
    out.push_back(make_root(z, err, precision));
  }
  return out;
}

KleinPoint normalized(KleinPoint v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& c : v) c /= n;
  return v;
}

double dot(const KleinPoint& a, const KleinPoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

KleinPoint cross(const KleinPoint& a, const KleinPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

using Frame = std::array<KleinPoint, 3>;

std::optional<Frame> frame(const KleinPoint& a, const KleinPoint& b) {
  const KleinPoint e1 = normalized(a);
  KleinPoint e2 = b;
  const double t = dot(b, e1);
  for (int i = 0; i < 3; ++i) e2[static_cast<std::size_t>(i)] -= t * e1[static_cast<std::size_t>(i)];
  if (std::sqrt(dot(e2, e2)) < 1e-6) return std::nullopt;
  e2 = normalized(e2);
  return Frame{e1, e2, cross(e1, e2)};
}

// Coordinates in frame f, re-expressed in frame g.
KleinPoint transfer(const Frame& f, const Frame& g, const KleinPoint& p) {
  const double c0 = dot(f[0], p), c1 = dot(f[1], p), c2 = dot(f[2], p);
  KleinPoint r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = c0 * g[0][i] + c1 * g[1][i] + c2 * g[2][i];
  return r;
}

std::vector<double> distance_profile(const std::vector<KleinPoint>& pts) {
  std::vector<double> d;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back(chordal_distance(pts[i], pts[j]));
  std::sort(d.begin(), d.end());
  return d;
}

// Worst matched distance under the best rotation found, or nullopt.
std::optional<double> fit(const std::vector<KleinPoint>& pts, const std::vector<KleinPoint>& ref, double tol) {
  if (pts.size() != ref.size()) return std::nullopt;
  const std::vector<double> dp = distance_profile(pts), dr = distance_profile(ref);
  for (std::size_t i = 0; i < dp.size(); ++i)
    if (std::abs(dp[i] - dr[i]) > 2 * tol) return std::nullopt;
  std::size_t ib = 1;
  double best = -1;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    const KleinPoint c = cross(pts[0], pts[j]);
    const double s = dot(c, c);
    if (s > best) {
      best = s;
      ib = j;
    }
  }
  const auto fp = frame(pts[0], pts[ib]);
  if (!fp) return std::nullopt;
  const double dab = chordal_distance(pts[0], pts[ib]);
  for (std::size_t i = 0; i < ref.size(); ++i)
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (i == j || std::abs(chordal_distance(ref[i], ref[j]) - dab) > 2 * tol) continue;
      const auto fr = frame(ref[i], ref[j]);
      if (!fr) continue;
      std::vector<bool> used(ref.size(), false);
      double worst = 0;
      bool ok = true;
      for (const auto& p : pts) {
        const KleinPoint q = transfer(*fp, *fr, p);
        std::size_t arg = ref.size();
        double dist = 1e300;
        for (std::size_t k = 0; k < ref.size(); ++k) {
          if (used[k]) continue;
          const double e = chordal_distance(q, ref[k]);
          if (e < dist) {
            dist = e;
            arg = k;
          }
        }
        if (dist > 2 * tol) {
          ok = false;
          break;
        }
        used[arg] = true;
        worst = std::max(worst, dist);
      }
      if (ok) return worst;
    }
  return std::nullopt;
}

std::vector<KleinPoint> prism_reference(int m, double h, bool two_rings) {
  std::vector<KleinPoint> ref{{0, 0, 1}, {0, 0, -1}};
  const double rho = std::sqrt(std::max(0.0, 1 - h * h));
  for (int k = 0; k < m; ++k) {
    const double t = 2 * std::numbers::pi * k / m;
    ref.push_back({rho * std::cos(t), rho * std::sin(t), h});
    if (two_rings) ref.push_back({rho * std::cos(t), rho * std::sin(t), -h});
  }
  return ref;
}

}  // namespace

ProjectiveRoot MobiusTransform::operator()(const ProjectiveRoot& z) const {
  std::complex<double> num, den;
  if (z.infinite) {
    num = delta;
    den = -gamma;
  } else {
    num = delta * z.z - beta;
    den = -gamma * z.z + alpha;
  }
  if (den == std::complex<double>(0)) return ProjectiveRoot::at_infinity();
  ProjectiveRoot r = ProjectiveRoot::finite(num / den);
  if (!z.infinite) {
    const std::complex<double> det = alpha * delta - beta * gamma;
    r.error_bound = z.error_bound * std::abs(det / (den * den));
  }
  return r;
}

std::vector<ProjectiveRoot> roots_of_form(const BinaryForm& f, long precision) {
  if (f.zero()) throw PreconditionError("the zero form has no roots");
  const int k = f.degree();
  int top = 0;
  while (f.coeff(top).zero()) ++top;
  int bottom = k;
  while (f.coeff(bottom).zero()) --bottom;
  std::vector<ProjectiveRoot> out;
  for (int i = 0; i < top; ++i) out.push_back(ProjectiveRoot::at_infinity());
  for (int i = bottom; i < k; ++i) out.push_back(ProjectiveRoot::finite(0.0));
  // f(t, 1) / t^(k - bottom), ascending in t
  std::vector<Scalar> c;
  for (int i = bottom; i >= top; --i) c.push_back(f.coeff(i));
  const SPoly p(std::move(c));
  for (const auto& [q, mult] : squarefree_factors(p)) {
    const auto rs = squarefree_roots(q, precision);
    for (const auto& r : rs)
      for (int e = 0; e < mult; ++e) out.push_back(r);
  }
  return out;
}

KleinPoint klein_point(const ProjectiveRoot& r) {
  if (r.infinite) return {0, 0, 1};
  const std::complex<double> z = r.z;
  const double n2 = std::norm(z);
  if (n2 <= 1) return {2 * z.real() / (n2 + 1), 2 * z.imag() / (n2 + 1), (n2 - 1) / (n2 + 1)};
  const std::complex<double> w = 1.0 / z;
  const double m2 = std::norm(w);
  return {2 * w.real() / (1 + m2), -2 * w.imag() / (1 + m2), (1 - m2) / (1 + m2)};
}

std::vector<KleinPoint> klein_set(const FormSet& forms, long precision) {
  std::vector<KleinPoint> out;
  for (const auto& f : forms)
    for (const auto& r : roots_of_form(f, precision)) out.push_back(klein_point(r));
  return out;
}

std::vector<KleinPoint> klein_set(const PowerIdentity& id, long precision) { return klein_set(id.forms(), precision); }

MobiusTransform mobius_of_change(const LinearChange& m) {
  if (!m.invertible()) throw PreconditionError("singular linear change");
  return {approx(m.a), approx(m.b), approx(m.c), approx(m.d)};
}

double chordal_distance(const KleinPoint& a, const KleinPoint& b) {
  const double x = a[0] - b[0], y = a[1] - b[1], z = a[2] - b[2];
  return std::sqrt(x * x + y * y + z * z);
}

std::vector<KleinPoint> octahedron_vertices() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<KleinPoint> cube_vertices() {
  const double s = 1 / std::sqrt(3.0);
  std::vector<KleinPoint> out;
  for (int i = 0; i < 8; ++i) out.push_back({i & 1 ? s : -s, i & 2 ? s : -s, i & 4 ? s : -s});
  return out;
}

std::vector<KleinPoint> icosahedron_vertices() {
  std::vector<KleinPoint> out{{0, 0, 1}, {0, 0, -1}};
  const double h = 1 / std::sqrt(5.0), rho = 2 / std::sqrt(5.0);
  for (int k = 0; k < 5; ++k) {
    const double t = 2 * std::numbers::pi * k / 5;
    out.push_back({rho * std::cos(t), rho * std::sin(t), h});
    out.push_back({-rho * std::cos(t), -rho * std::sin(t), -h});
  }
  return out;
}

std::string KleinLabel::to_string() const {
  switch (shape) {
    case KleinShape::Octahedron: return "octahedron";
    case KleinShape::Cube: return "cube";
    case KleinShape::Icosahedron: return "icosahedron";
    case KleinShape::PrismWithPoles: return std::to_string(m) + "-gon-prism-with-poles";
    case KleinShape::Unknown: break;
  }
  return "unknown";
}

KleinLabel recognize(const std::vector<KleinPoint>& points, double tol) {
  KleinLabel out;
  const std::size_t n = points.size();
  if (n < 4 || n > 30) return out;
  const std::pair<KleinShape, std::vector<KleinPoint>> fixed[] = {
      {KleinShape::Octahedron, octahedron_vertices()},
      {KleinShape::Cube, cube_vertices()},
      {KleinShape::Icosahedron, icosahedron_vertices()}};
  for (const auto& [shape, ref] : fixed) {
    if (ref.size() != n) continue;
    if (auto r = fit(points, ref, tol)) {
      out.shape = shape;
      out.residual = *r;
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      KleinPoint s{points[i][0] + points[j][0], points[i][1] + points[j][1], points[i][2] + points[j][2]};
      if (std::sqrt(dot(s, s)) > 2 * tol) continue;
      std::vector<double> lat;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) lat.push_back(dot(points[k], points[i]));
      const double h = std::abs(lat.front());
      if (std::any_of(lat.begin(), lat.end(), [&](double x) { return std::abs(std::abs(x) - h) > 2 * tol; })) continue;
      std::vector<KleinPoint> ref;
      int m = 0;
      if (h <= 2 * tol) {
        m = static_cast<int>(n - 2);
        ref = prism_reference(m, 0, false);
      } else {
        const auto up = std::count_if(lat.begin(), lat.end(), [](double x) { return x > 0; });
        if (2 * static_cast<std::size_t>(up) != lat.size()) continue;
        m = static_cast<int>(up);
        ref = prism_reference(m, h, true);
      }
      if (m < 3) continue;
      if (auto r = fit(points, ref, tol)) {
        out.shape = KleinShape::PrismWithPoles;
        out.m = m;
        out.residual = *r;
        return out;
      }
    }
  return out;
}

}  // namespace quadpow
