#include "quadpow/case_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quadpow/sylvester.hpp"

namespace quadpow {

// ---- MultiParamPoly ----------------------------------------------------

MultiParamPoly::MultiParamPoly(const Rational& c) {
  if (!is_zero(c)) t_[{0, 0, 0}] = c;
}

MultiParamPoly MultiParamPoly::monomial(const Rational& c, const Exponent& e) {
  MultiParamPoly p;
  if (!is_zero(c)) p.t_[e] = c;
  return p;
}

MultiParamPoly MultiParamPoly::var(int v, int power) {
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(Rational(1), e);
}

int MultiParamPoly::degree(int v) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

Rational MultiParamPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

MultiParamPoly MultiParamPoly::operator-() const {
  MultiParamPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiParamPoly& MultiParamPoly::operator+=(const MultiParamPoly& o) {
  for (const auto& [e, c] : o.t_) {
    Rational& slot = t_[e];
    slot += c;
    if (is_zero(slot)) t_.erase(e);
  }
  return *this;
}

MultiParamPoly& MultiParamPoly::operator-=(const MultiParamPoly& o) { return *this += -o; }

MultiParamPoly operator*(const MultiParamPoly& a, const MultiParamPoly& b) {
  MultiParamPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MultiParamPoly::Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      Rational& slot = r.t_[e];
      slot += ca * cb;
      if (is_zero(slot)) r.t_.erase(e);
    }
  return r;
}

MultiParamPoly MultiParamPoly::scaled(const Rational& s) const {
  if (is_zero(s)) return {};
  MultiParamPoly r = *this;
  for (auto& [e, c] : r.t_) c *= s;
  return r;
}

MultiParamPoly MultiParamPoly::pow(unsigned e) const {
  MultiParamPoly result(1L), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiParamPoly MultiParamPoly::reduce_power(int v, int n) const {
  if (n <= 0) throw PreconditionError("reduce_power needs a positive order");
  MultiParamPoly r;
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    f[static_cast<std::size_t>(v)] %= n;
    r += monomial(c, f);
  }
  return r;
}

namespace {

// powers[k] = base^k for k <= n
std::vector<MultiParamPoly> powers_of(const MultiParamPoly& base, int n) {
  std::vector<MultiParamPoly> out{MultiParamPoly(1L)};
  for (int k = 1; k <= n; ++k) out.push_back(out.back() * base);
  return out;
}

}  // namespace

MultiParamPoly MultiParamPoly::substitute(const std::array<MultiParamPoly, 3>& values) const {
  std::array<std::vector<MultiParamPoly>, 3> pw;
  for (int v = 0; v < 3; ++v) pw[static_cast<std::size_t>(v)] = powers_of(values[static_cast<std::size_t>(v)], degree(v));
  MultiParamPoly r;
  for (const auto& [e, c] : t_) r += (pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])] *
                                      pw[2][static_cast<std::size_t>(e[2])]).scaled(c);
  return r;
}

MultiParamPoly MultiParamPoly::substitute_fraction(const std::array<MultiParamPoly, 3>& num,
                                                   const std::array<MultiParamPoly, 3>& den) const {
  std::array<int, 3> top{degree(0), degree(1), degree(2)};
  std::array<std::vector<MultiParamPoly>, 3> pn, pd;
  for (std::size_t v = 0; v < 3; ++v) {
    pn[v] = powers_of(num[v], top[v]);
    pd[v] = powers_of(den[v], top[v]);
  }
  MultiParamPoly r;
  for (const auto& [e, c] : t_) {
    MultiParamPoly term(c);
    for (std::size_t v = 0; v < 3; ++v)
      term = term * pn[v][static_cast<std::size_t>(e[v])] * pd[v][static_cast<std::size_t>(top[v] - e[v])];
    r += term;
  }
  return r;
}

Scalar MultiParamPoly::evaluate(const std::array<Scalar, 3>& values) const {
  std::array<std::vector<Scalar>, 3> pw;
  for (std::size_t v = 0; v < 3; ++v) {
    pw[v].push_back(Scalar(1L));
    for (int k = 1; k <= degree(static_cast<int>(v)); ++k) pw[v].push_back(pw[v].back() * values[v]);
  }
  Scalar acc(0L);
  for (const auto& [e, c] : t_)
    acc += Scalar(c) * pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])] *
           pw[2][static_cast<std::size_t>(e[2])];
  return acc;
}

QPoly MultiParamPoly::univariate(int v) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree(v) + 1), Rational(0));
  for (const auto& [e, k] : t_) {
    for (int w = 0; w < 3; ++w)
      if (w != v && e[static_cast<std::size_t>(w)] != 0) throw PreconditionError("polynomial is not univariate");
    c[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])] = k;
  }
  return QPoly(std::move(c));
}

std::pair<int, MultiParamPoly> MultiParamPoly::split_middle() const {
  if (t_.empty()) return {0, {}};
  const int parity = t_.begin()->first[1] % 2;
  MultiParamPoly r;
  for (const auto& [e, c] : t_) {
    if (e[1] % 2 != parity) throw PreconditionError("mixed parity in the middle variable");
    r += monomial(c, {e[0], (e[1] - parity) / 2, e[2]});
  }
  return {parity, r};
}

std::string MultiParamPoly::to_string(const std::array<std::string, 3>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first
  std::vector<std::pair<Exponent, Rational>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.first[0] + x.first[1] + x.first[2] > y.first[0] + y.first[1] + y.first[2];
  });
  for (const auto& [e, c] : v) {
    Rational a = abs(c);
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool need_star = false;
    if (constant || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << names[k];
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

// ---- tame --------------------------------------------------------------

std::string to_string(TameBranchKind k) { return k == TameBranchKind::EvenPower ? "even-power" : "symmetric-pair"; }

std::size_t TameReport::realized_count() const {
  std::size_t n = 0;
  for (const auto& b : branches)
    for (const auto& c : b.candidates) n += c.realized;
  return n;
}

namespace {

std::vector<std::array<QPoly, 3>> rows_from(const std::vector<QPoly>& a) {
  std::vector<std::array<QPoly, 3>> m;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) m.push_back({a[i], a[i + 1], a[i + 2]});
  return m;
}

}  // namespace

std::vector<std::array<QPoly, 3>> tame_symmetric_matrix(long d) {
  if (d < 3) throw PreconditionError("tame analysis needs d >= 3");
  // coeff of x^(2d-2j) y^(2j) is 2 sum_i binom(d,2i) binom(d-2i, j-i) u^i
  std::vector<QPoly> a;
  for (long j = 0; j <= d; ++j) {
    std::vector<Rational> c;
    for (long i = 0; 2 * i <= d && i <= j; ++i)
      c.push_back(Rational(2 * binomial(d, 2 * i) * binomial(d - 2 * i, j - i)) / Rational(binomial(d, j)));
    a.push_back(QPoly(std::move(c)));
  }
  return rows_from(a);
}

std::vector<std::array<QPoly, 3>> tame_even_matrix(long d) {
  if (d < 4 || d % 2 != 0) throw PreconditionError("even-power branch needs even d >= 4");
  std::vector<QPoly> a(static_cast<std::size_t>(d + 1), QPoly(1L));
  a[static_cast<std::size_t>(d / 2)] = QPoly(std::vector<Rational>{1, 1});
  return rows_from(a);
}

QPoly minor3(const std::vector<std::array<QPoly, 3>>& m, const std::array<int, 3>& rows) {
  const auto& r0 = m.at(static_cast<std::size_t>(rows[0]));
  const auto& r1 = m.at(static_cast<std::size_t>(rows[1]));
  const auto& r2 = m.at(static_cast<std::size_t>(rows[2]));
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

namespace {

Scalar eval_at(const QPoly& p, const Scalar& x) {
  Scalar acc(0L);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + Scalar(p.coeffs()[i]);
  return acc;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Nonzero exact roots: rational roots by the rational root test (bounded),
// then whatever is left of degree <= 2 by the quadratic formula.
std::pair<std::vector<Scalar>, QPoly> exact_roots(QPoly p) {
  std::vector<Scalar> roots;
  p = p.shifted_down(p.valuation());
  if (p.degree() <= 0) return {roots, QPoly(1L)};
  p = squarefree_part(p);
  if (p.degree() > 2) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
    std::vector<Integer> z;
    for (const auto& c : p.coeffs()) z.push_back(Integer(c * Rational(l)));
    const Integer bound("1000000000000");
    if (abs(z.front()) < bound && abs(z.back()) < bound) {
      for (const Integer& num : divisors(z.front()))
        for (const Integer& den : divisors(z.back()))
          for (int s : {1, -1}) {
            Rational r(num * s, den);
            r.canonicalize();
            if (p.degree() > 2 && is_zero(p.eval(r))) {
              roots.push_back(Scalar(r));
              p = divmod(p, QPoly(std::vector<Rational>{-r, 1})).first;
            }
          }
    }
  }
  if (p.degree() == 1) {
    roots.push_back(Scalar(-p.coeff(0) / p.coeff(1)));
    p = QPoly(1L);
  } else if (p.degree() == 2) {
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Scalar s = sqrt_rational(b * b - 4 * a * c);
    const Scalar inv(Rational(1) / (2 * a));
    roots.push_back((Scalar(-b) + s) * inv);
    roots.push_back((Scalar(-b) - s) * inv);
    p = QPoly(1L);
  }
  return {roots, p};
}

std::vector<std::array<int, 3>> minor_order(int n) {
  std::vector<std::array<int, 3>> out;
  std::set<std::array<int, 3>> seen;
  auto push = [&](int a, int b, int c) {
    std::array<int, 3> r{a, b, c};
    std::sort(r.begin(), r.end());
    if (r[0] < 0 || r[2] >= n || r[0] == r[1] || r[1] == r[2]) return;
    if (seen.insert(r).second) out.push_back(r);
  };
  push(0, 1, n - 1);
  push(0, 1, n - 2);
  push(0, n - 2, n - 1);
  push(1, n - 2, n - 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) push(a, b, c);
  return out;
}

TameBranch analyze_branch(long d, TameBranchKind kind) {
  TameBranch br;
  br.kind = kind;
  br.variable = kind == TameBranchKind::EvenPower ? "b" : "b^2";
  br.matrix = kind == TameBranchKind::EvenPower ? tame_even_matrix(d) : tame_symmetric_matrix(d);
  for (const auto& rows : minor_order(static_cast<int>(br.matrix.size())))
    br.minors.push_back({rows, minor3(br.matrix, rows)});
  br.seed = 0;
  while (br.seed < br.minors.size() && br.minors[br.seed].poly.zero()) ++br.seed;
  if (br.seed == br.minors.size()) throw std::logic_error("every 3x3 minor vanishes identically");
  auto [roots, rest] = exact_roots(br.minors[br.seed].poly);
  br.seed_roots = roots;
  br.unresolved = rest;

  const BinaryForm x2y2 = quadratic(Scalar(1L), Scalar(0L), Scalar(1L));
  const BinaryForm xy = quadratic(Scalar(0L), Scalar(1L), Scalar(0L));
  for (const Scalar& v : roots) {
    TameCandidate c;
    c.value = v;
    for (const auto& m : br.minors) {
      Scalar val = eval_at(m.poly, v);
      if (!val.zero()) {
        c.witness_rows = m.rows;
        c.witness_value = val;
        break;
      }
    }
    if (!c.witness_rows) {
      BinaryForm f3, f4;
      Scalar l4(1L);
      if (kind == TameBranchKind::SymmetricPair) {
        const Scalar b = sqrt_scalar(v);
        f3 = quadratic(Scalar(1L), b, Scalar(1L));
        f4 = quadratic(Scalar(1L), -b, Scalar(1L));
      } else {
        f3 = x2y2;
        f4 = xy;
        l4 = v * Scalar(Rational(binomial(d, d / 2)));
      }
      BinaryForm p = form_power(f3, d, PowerMethod::Auto) + form_power(f4, d, PowerMethod::Auto).scaled(l4);
      auto decs = two_power_decompose(p);
      if (!decs.empty()) {
        const auto& dec = decs.front();
        PowerIdentity id;
        id.d = d;
        id.terms = {{Scalar(1L), f3, Side::Left}, {l4, f4, Side::Left}, {dec.mu1, dec.g1, Side::Right}, {dec.mu2, dec.g2, Side::Right}};
        c.realized = true;
        c.identity = std::move(id);
      }
    }
    br.candidates.push_back(std::move(c));
  }
  return br;
}

}  // namespace

TameReport tame_analyze(long d) {
  if (d < 4) throw PreconditionError("tame_analyze needs d >= 4");
  TameReport rep;
  rep.d = d;
  if (d % 2 == 0) rep.branches.push_back(analyze_branch(d, TameBranchKind::EvenPower));
  rep.branches.push_back(analyze_branch(d, TameBranchKind::SymmetricPair));
  return rep;
}

// ---- wild --------------------------------------------------------------

std::string to_string(BranchStatus s) { return s == BranchStatus::Solved ? "solved" : "contradiction"; }

namespace {

using MP = MultiParamPoly;
constexpr int kL = 0, kA = 1, kB = 2;

std::vector<MP> mul(const std::vector<MP>& a, const std::vector<MP>& b) {
  std::vector<MP> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<MP> power(std::vector<MP> base, long e) {
  std::vector<MP> result{MP(1L)};
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

}  // namespace

WildCoefficients wild_coefficients(long d) {
  if (d < 4) throw PreconditionError("wild_coefficients needs d >= 4");
  const MP lam = MP::var(kL), al = MP::var(kA), be = MP::var(kB);
  std::vector<MP> first = power({MP(1L), -(lam * al), MP(1L)}, d);
  std::vector<MP> second = power({MP(1L), al, be}, d);
  std::vector<MP> swapped = power({be, al, MP(1L)}, d);
  WildCoefficients w;
  w.d = d;
  for (std::size_t i = 0; i < first.size(); ++i) {
    w.a.push_back(first[i] + lam * second[i]);
    w.b.push_back(second[i] - swapped[i]);
  }
  return w;
}

namespace {

// value of an odd-in-alpha polynomial squared, with mu = alpha^2
Scalar squared_value(const MP& p, const Scalar& lambda, const Scalar& mu, const Scalar& beta) {
  auto [parity, q] = p.split_middle();
  Scalar v = q.evaluate({lambda, mu, beta});
  return parity ? v * v * mu : v * v;
}

QPoly strip_lambda_factors(QPoly p) {
  p = p.shifted_down(p.valuation());
  const QPoly one_minus(std::vector<Rational>{1, 0, -1});
  while (!p.zero()) {
    auto [q, r] = divmod(p, one_minus);
    if (!r.zero()) break;
    p = q;
  }
  return p;
}

WildBranch make_branch(std::string name, std::vector<std::string> relations) {
  WildBranch b;
  b.name = std::move(name);
  b.relations = std::move(relations);
  return b;
}

std::string cond_name(char c, long i) { return std::string(1, c) + std::to_string(i); }

WildSolution make_solution(long d, const Scalar& lambda, const Scalar& alpha, const Scalar& beta) {
  WildSolution s;
  s.lambda = lambda;
  s.alpha = alpha;
  s.beta = beta;
  s.f3 = quadratic(Scalar(1L), -lambda * alpha, Scalar(1L));
  s.f4 = quadratic(Scalar(1L), alpha, beta);
  s.p = form_power(s.f3, d, PowerMethod::Auto) + form_power(s.f4, d, PowerMethod::Auto).scaled(lambda);
  const Scalar m1(-1L);
  s.identity.d = d;
  s.identity.terms = {{Scalar(1L), s.f3, Side::Left},
                      {lambda, s.f4, Side::Left},
                      {Scalar(1L), s.f3.scale_y(m1), Side::Right},
                      {lambda, s.f4.scale_y(m1), Side::Right}};
  s.verified = is_even(s.p) && verify_identity(s.identity).pass;
  return s;
}

}  // namespace

WildReport wild_analyze(long d) {
  if (d < 4) throw PreconditionError("wild_analyze needs d >= 4");
  WildReport rep;
  rep.d = d;
  const WildCoefficients w = wild_coefficients(d);
  auto A = [&](long i) { return w.a[static_cast<std::size_t>(i)]; };
  auto B = [&](long i) { return w.b[static_cast<std::size_t>(i)]; };
  rep.conditions.push_back({"a3", A(3)});
  rep.conditions.push_back({"b3", B(3)});
  rep.conditions.push_back({"a5", A(5)});
  rep.conditions.push_back({"b5", B(5)});
  rep.conditions.push_back({"a7", A(7)});

  const MP lam = MP::var(kL), one(1L);
  const Rational dm2(d - 2);
  // relations as fractions over (lambda, mu, beta), mu = alpha^2
  struct Relation {
    std::array<MP, 3> num, den;
  };
  auto check = [&](const MP& p, const Relation& r) {
    return p.split_middle().second.substitute_fraction(r.num, r.den).reduce_power(kB, static_cast<int>(d - 1));
  };

  // beta = -1, mu = 12 / ((d-2)(1 - lambda^2))
  const Relation r13{{lam, MP(12L), MP(-1L)}, {one, (one - lam * lam).scaled(dm2), one}};
  // beta = 1/lambda^2, mu = -6 / (lambda^2 (d-2))
  const Relation r14{{lam, MP(-6L), one}, {one, (lam * lam).scaled(dm2), lam * lam}};

  WildBranch b13 = make_branch("beta = -1, alpha^2 = 12/((d-2)(1-lambda^2))", {"beta = -1", "alpha^2 = 12/((d-2)(1-lambda^2))"});
  WildBranch b14 = make_branch("beta = 1/lambda^2, alpha^2 = -6/(lambda^2 (d-2))", {"beta = 1/lambda^2", "alpha^2 = -6/(lambda^2 (d-2))"});
  const std::string name15 = "beta = -1, lambda^2 = -1, alpha^2 = 6/(d-2)";
  if (d % 2 == 0) {
    b13.status = BranchStatus::Contradiction;
    b13.witness_label = "beta^(d-1)";
    b13.witness = Scalar(-1L);
  }
  for (auto* br : {&b13, &b14}) {
    if (br->status == BranchStatus::Contradiction) continue;
    const Relation& r = br == &b13 ? r13 : r14;
    for (const char* name : {"a3", "b3"}) {
      const MP& p = name[0] == 'a' ? A(3) : B(3);
      if (!check(p, r).zero()) throw std::logic_error(std::string("branch does not satisfy ") + name);
      br->satisfied.push_back(name);
    }
  }
  if (d >= 5) {
    for (auto* br : {&b13, &b14}) {
      if (br->status == BranchStatus::Contradiction) continue;
      const Relation& r = br == &b13 ? r13 : r14;
      QPoly rest = strip_lambda_factors(check(A(5), r).univariate(kL));
      br->lambda_condition = rest;
      if (squarefree_part(rest) != QPoly(std::vector<Rational>{1, 0, 1}))
        throw std::logic_error("a5 leaves a lambda condition other than lambda^2 = -1");
      br->satisfied.push_back("a5 (forces lambda^2 = -1)");
      br->next = name15;
    }
  }
  rep.branches.push_back(b13);
  rep.branches.push_back(b14);

  const Scalar i = Scalar::zeta(4);
  if (d == 4) {
    // beta^3 = 1, beta != 1; beta = omega^2 up to the (y, x) symmetry
    const Scalar w1 = Scalar::zeta(3), w2 = Scalar::zeta(3, 2);
    const Scalar alpha = sqrt_rational(-3) * w1;
    for (const Scalar& lambda : {w2, -w2}) {
      if (!(w2 == (lambda * lambda).inverse()) || !(alpha * alpha == Scalar(-3L) / (lambda * lambda)))
        throw std::logic_error("quartic wild parameters are inconsistent");
      rep.solutions.push_back(make_solution(d, lambda, alpha, w2));
    }
    return rep;
  }

  WildBranch b15 = make_branch(name15, {"beta = -1", "lambda^2 = -1", "alpha^2 = 6/(d-2)"});
  const Scalar mu(Rational(6) / dm2), beta(-1L);
  if (d % 4 != 1) b15.relations.push_back("lambda = +-i needs d = 1 mod 4; here d = " + std::to_string(d % 4) + " mod 4");
  // odd coefficients a_k, b_k for k <= d; the rest follow from a_i - a_(2d-i) = lambda b_i
  for (long k = 1; k <= d && !b15.witness; k += 2)
    for (char c : {'a', 'b'}) {
      const MP& p = c == 'a' ? A(k) : B(k);
      std::optional<Scalar> bad;
      for (const Scalar& lambda : {i, -i}) {
        const Scalar v = squared_value(p, lambda, mu, beta);
        if (!v.zero()) {
          bad = v;
          break;
        }
      }
      if (bad) {
        b15.status = BranchStatus::Contradiction;
        b15.witness_label = cond_name(c, k) + "^2";
        b15.witness = bad;
        break;
      }
      b15.satisfied.push_back(cond_name(c, k));
    }
  if (b15.status == BranchStatus::Solved) {
    const Scalar alpha = sqrt_rational(Rational(6) / dm2);
    for (const Scalar& lambda : {i, -i}) rep.solutions.push_back(make_solution(d, lambda, alpha, beta));
  }
  rep.branches.push_back(b15);
  return rep;
}

WildNormalization wild_normalize(const BinaryForm& f3, const BinaryForm& f4, long d) {
  if (f3.degree() != 2 || f4.degree() != 2) throw PreconditionError("wild_normalize needs two quadratics");
  for (const BinaryForm* f : {&f3, &f4})
    for (int k = 0; k <= 2; ++k)
      if (f->coeff(k).zero()) throw PreconditionError("wild_normalize needs all six coefficients nonzero");
  WildNormalization n;
  n.u = sqrt_scalar(f3.coeff(0)).inverse();
  n.v = sqrt_scalar(f3.coeff(2)).inverse();
  const LinearChange m{n.u, Scalar(0L), Scalar(0L), n.v};
  n.g3 = compose(f3, m);
  const BinaryForm h = compose(f4, m);
  const Scalar a2 = h.coeff(0);
  n.g4 = h.scaled(a2.inverse());
  n.lambda = a2.pow(d);
  n.alpha1 = n.g3.coeff(1);
  n.alpha = n.g4.coeff(1);
  n.beta = n.g4.coeff(2);
  return n;
}

}  // namespace quadpow
