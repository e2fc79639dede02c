#include "quadpow/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

constexpr long kMaxTableEntry = 1L << 40;

struct LevelData {
  long n = 1;
  long phi = 1;
  std::vector<long> cpoly;
  // powmod[k] = coordinates of x^k mod Phi_n, 0 <= k < n.
  std::vector<std::vector<long>> powmod;
};

struct Projection {
  long m = 1;
  std::vector<std::size_t> rows;
  std::vector<std::vector<Integer>> sinv;  // inverse of the selected rows, times D
  Integer D = 1;
  std::vector<std::vector<long>> embed;  // embed[j] = coordinates of zeta_m^j at level n
};

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size() - dn; k-- > 0;) {
    long c = num[k + dn];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

class Tables {
 public:
  static Tables& instance() {
    static Tables t;
    return t;
  }

  const LevelData& level(long n) {
    {
      std::shared_lock lock(mu_);
      auto it = levels_.find(n);
      if (it != levels_.end()) return *it->second;
    }
    auto data = std::make_unique<LevelData>(build_level(n));
    std::unique_lock lock(mu_);
    auto [it, inserted] = levels_.try_emplace(n, std::move(data));
    return *it->second;
  }

  const Projection& projection(long n, long p) {
    const long key = n * 4096 + p;
    {
      std::shared_lock lock(mu_);
      auto it = proj_.find(key);
      if (it != proj_.end()) return *it->second;
    }
    auto data = std::make_unique<Projection>(build_projection(n, p));
    std::unique_lock lock(mu_);
    auto [it, inserted] = proj_.try_emplace(key, std::move(data));
    return *it->second;
  }

  const std::vector<long>& cpoly(long n) {
    {
      std::shared_lock lock(mu_);
      auto it = cpolys_.find(n);
      if (it != cpolys_.end()) return *it->second;
    }
    std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) num = poly_exact_div(num, cpoly(d));
    auto data = std::make_unique<std::vector<long>>(std::move(num));
    std::unique_lock lock(mu_);
    auto [it, inserted] = cpolys_.try_emplace(n, std::move(data));
    return *it->second;
  }

 private:
  LevelData build_level(long n) {
    LevelData d;
    d.n = n;
    d.cpoly = cpoly(n);
    d.phi = static_cast<long>(d.cpoly.size()) - 1;
    const auto phi = static_cast<std::size_t>(d.phi);
    d.powmod.assign(static_cast<std::size_t>(n), std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    if (phi == 0) throw std::logic_error("bad level");
    for (long k = 0; k < n; ++k) {
      d.powmod[static_cast<std::size_t>(k)] = cur;
      long top = cur[phi - 1];
      for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (std::size_t j = 0; j < phi; ++j) {
        cur[j] -= top * d.cpoly[j];
        if (std::labs(cur[j]) > kMaxTableEntry) throw PreconditionError("cyclotomic level too large");
      }
    }
    return d;
  }

  Projection build_projection(long n, long p) {
    const LevelData& big = level(n);
    Projection pr;
    pr.m = n / p;
    const LevelData& small = level(pr.m);
    const auto rows_n = static_cast<std::size_t>(big.phi);
    const auto cols = static_cast<std::size_t>(small.phi);
    pr.embed.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) pr.embed[j] = big.powmod[static_cast<std::size_t>((p * static_cast<long>(j)) % n)];
    // Greedy row selection by incremental elimination.
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivcol;
    for (std::size_t r = 0; r < rows_n && pr.rows.size() < cols; ++r) {
      std::vector<Rational> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = pr.embed[j][r];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (is_zero(row[pivcol[b]])) continue;
        Rational f = row[pivcol[b]] / basis[b][pivcol[b]];
        for (std::size_t j = 0; j < cols; ++j) row[j] -= f * basis[b][j];
      }
      std::size_t pc = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_zero(row[j])) {
          pc = j;
          break;
        }
      if (pc == cols) continue;
      basis.push_back(std::move(row));
      pivcol.push_back(pc);
      pr.rows.push_back(r);
    }
    if (pr.rows.size() != cols) throw std::logic_error("subfield embedding not injective");
    // Invert S (rows of E) by Gauss-Jordan.
    std::vector<std::vector<Rational>> a(cols, std::vector<Rational>(2 * cols));
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = pr.embed[j][pr.rows[i]];
      a[i][cols + i] = 1;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t piv = c;
      while (is_zero(a[piv][c])) ++piv;
      std::swap(a[piv], a[c]);
      Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t i = 0; i < cols; ++i) {
        if (i == c || is_zero(a[i][c])) continue;
        Rational f = a[i][c];
        for (std::size_t j = 0; j < 2 * cols; ++j) a[i][j] -= f * a[c][j];
      }
    }
    Integer D = 1;
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), a[i][cols + j].get_den_mpz_t());
    pr.D = D;
    pr.sinv.assign(cols, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Rational v = a[i][cols + j] * D;
        pr.sinv[i][j] = v.get_num();
      }
    return pr;
  }

  std::shared_mutex mu_;
  std::unordered_map<long, std::unique_ptr<LevelData>> levels_;
  std::unordered_map<long, std::unique_ptr<Projection>> proj_;
  std::unordered_map<long, std::unique_ptr<std::vector<long>>> cpolys_;
};

inline void addmul(Integer& r, const Integer& a, long b) {
  if (b >= 0)
    mpz_addmul_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  else
    mpz_submul_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-b));
}

long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(long n) {
  if (n < 1) throw PreconditionError("cyclotomic polynomial index must be positive");
  return Tables::instance().cpoly(n);
}

Cyclotomic::Cyclotomic() : level_(1), num_(1, Integer(0)), den_(1) {}

Cyclotomic::Cyclotomic(long v) : level_(1), num_(1, Integer(v)), den_(1) {}

Cyclotomic::Cyclotomic(const Rational& q) : level_(1), num_(1, q.get_num()), den_(q.get_den()) {
  if (den_ != 1 || sgn(den_) < 0) {
    Rational c = q;
    c.canonicalize();
    num_[0] = c.get_num();
    den_ = c.get_den();
  }
}

Cyclotomic::Cyclotomic(long level, std::vector<Integer> num, Integer den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
  if (n < 1) throw PreconditionError("zeta level must be at least 1");
  const LevelData& d = Tables::instance().level(n);
  const auto& row = d.powmod[static_cast<std::size_t>(mod_pos(k, n))];
  std::vector<Integer> num(row.begin(), row.end());
  return Cyclotomic(n, std::move(num), Integer(1));
}

Cyclotomic Cyclotomic::from_coords(long n, const std::vector<Rational>& coords) {
  const LevelData& d = Tables::instance().level(n);
  if (coords.size() != static_cast<std::size_t>(d.phi)) throw PreconditionError("coordinate vector has wrong length");
  Integer den = 1;
  for (const auto& q : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> num(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return Cyclotomic(n, std::move(num), std::move(den));
}

Rational Cyclotomic::coord(std::size_t e) const {
  if (e >= num_.size()) return 0;
  Rational q(num_[e], den_);
  q.canonicalize();
  return q;
}

bool Cyclotomic::zero() const { return level_ == 1 && sgn(num_[0]) == 0; }

Rational Cyclotomic::rational_value() const {
  if (level_ != 1) throw PreconditionError("value is not rational");
  return coord(0);
}

std::optional<Cyclotomic::Monomial> Cyclotomic::as_monomial() const {
  if (zero()) return std::nullopt;
  if (level_ == 1) return Monomial{coord(0), 1, 0};
  const LevelData& d = Tables::instance().level(level_);
  for (long e = 0; e < level_; ++e) {
    const auto& row = d.powmod[static_cast<std::size_t>(e)];
    // find scale from first nonzero of row
    std::size_t j0 = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        j0 = j;
        break;
      }
    if (j0 == row.size() || sgn(num_[j0]) == 0) continue;
    Rational scale(num_[j0], Integer(row[j0]));
    scale.canonicalize();
    bool ok = true;
    for (std::size_t j = 0; j < row.size() && ok; ++j) ok = Rational(num_[j]) == scale * row[j];
    if (ok) {
      Rational q = scale / Rational(den_);
      return Monomial{q, level_, e};
    }
  }
  return std::nullopt;
}

void Cyclotomic::normalize() {
  if (sgn(den_) == 0) throw DivisionByZero();
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  bool rational = true;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0) {
      rational = false;
      break;
    }
  if (rational) {
    num_.resize(1);
    level_ = 1;
  }
  Integer g = den_;
  for (const auto& x : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (sgn(num_[0]) == 0 && num_.size() == 1) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (level_ == 1) return;
  bool changed = true;
  while (changed && level_ > 1) {
    changed = false;
    for (long p : prime_divisors(level_)) {
      if (level_ % (p * p) == 0 ? try_reduce_square(p) : try_reduce_simple(p)) {
        changed = true;
        break;
      }
    }
  }
}

bool Cyclotomic::try_reduce_square(long p) {
  for (std::size_t e = 0; e < num_.size(); ++e)
    if (static_cast<long>(e) % p != 0 && sgn(num_[e]) != 0) return false;
  std::vector<Integer> sub(num_.size() / static_cast<std::size_t>(p));
  for (std::size_t k = 0; k < sub.size(); ++k) sub[k] = num_[k * static_cast<std::size_t>(p)];
  num_ = std::move(sub);
  level_ /= p;
  if (level_ == 1 || num_.size() == 1) {
    num_.resize(1);
    level_ = 1;
  }
  return true;
}

bool Cyclotomic::try_reduce_simple(long p) {
  const Projection& pr = Tables::instance().projection(level_, p);
  const std::size_t cols = pr.rows.size();
  std::vector<Integer> c(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc += pr.sinv[i][j] * num_[pr.rows[j]];
    c[i] = std::move(acc);
  }
  Integer check;
  for (std::size_t r = 0; r < num_.size(); ++r) {
    check = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (pr.embed[j][r] != 0) addmul(check, c[j], pr.embed[j][r]);
    if (check != num_[r] * pr.D) return false;
  }
  Cyclotomic reduced(pr.m, std::move(c), den_ * pr.D);
  *this = std::move(reduced);
  return true;
}

std::vector<Integer> Cyclotomic::lifted_numerators(long L) const {
  if (L == level_) return num_;
  if (L % level_ != 0) throw std::logic_error("lift target is not a multiple of the level");
  const LevelData& d = Tables::instance().level(L);
  const long f = L / level_;
  std::vector<Integer> out(static_cast<std::size_t>(d.phi), Integer(0));
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) == 0) continue;
    const auto& row = d.powmod[static_cast<std::size_t>((static_cast<long>(e) * f) % L)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) addmul(out[j], num_[e], row[j]);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.zero()) return a;
  if (a.zero()) return b;
  const long L = std::lcm(a.level_, b.level_);
  std::vector<Integer> na = a.lifted_numerators(L), nb = b.lifted_numerators(L);
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < na.size(); ++i) na[i] += nb[i];
    return Cyclotomic(L, std::move(na), a.den_);
  }
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  Integer fa = l / a.den_, fb = l / b.den_;
  for (std::size_t i = 0; i < na.size(); ++i) na[i] = na[i] * fa + nb[i] * fb;
  return Cyclotomic(L, std::move(na), std::move(l));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.zero() || b.zero()) return Cyclotomic();
  if (a.level_ == 1 || b.level_ == 1) {
    const Cyclotomic& r = a.level_ == 1 ? a : b;
    const Cyclotomic& o = a.level_ == 1 ? b : a;
    std::vector<Integer> num = o.num_;
    for (auto& x : num) x *= r.num_[0];
    return Cyclotomic(o.level_, std::move(num), o.den_ * r.den_);
  }
  const long L = std::lcm(a.level_, b.level_);
  const LevelData& d = Tables::instance().level(L);
  std::vector<Integer> na = a.lifted_numerators(L), nb = b.lifted_numerators(L);
  const std::size_t phi = na.size();
  std::vector<Integer> acc(2 * phi - 1, Integer(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(na[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (sgn(nb[j]) != 0) mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
  }
  std::vector<Integer> out(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t k = phi; k < acc.size(); ++k) {
    if (sgn(acc[k]) == 0) continue;
    const auto& row = d.powmod[k % static_cast<std::size_t>(L)];
    for (std::size_t j = 0; j < phi; ++j)
      if (row[j] != 0) addmul(out[j], acc[k], row[j]);
  }
  return Cyclotomic(L, std::move(out), a.den_ * b.den_);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.level_ == b.level_ && a.den_ == b.den_ && a.num_ == b.num_;
}

QPoly to_qpoly(const Cyclotomic& c) {
  std::vector<Rational> v(c.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c.coord(i);
  return QPoly(std::move(v));
}

Cyclotomic Cyclotomic::inverse() const {
  if (zero()) throw DivisionByZero();
  if (level_ == 1) return Cyclotomic(Rational(1) / coord(0));
  // Solve A y = det * e_0 fraction-free, where column j of A is num * zeta^j.
  const auto& cp = cyclotomic_poly(level_);
  const std::size_t n = num_.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1, Integer(0)));
  std::vector<Integer> col = num_;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col[i];
    const Integer top = col[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t i = 0; i < n; ++i)
        if (cp[i] != 0) addmul(col[i], top, -cp[i]);
  }
  a[0][n] = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a[piv][k]) == 0) ++piv;
    if (piv == n) throw std::logic_error("cyclotomic inverse failed");
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const Integer det = a[n - 1][n - 1];
  std::vector<Integer> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Integer acc = det * a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * y[j];
    mpz_divexact(y[i].get_mpz_t(), acc.get_mpz_t(), a[i][i].get_mpz_t());
  }
  for (auto& v : y) v *= den_;
  Integer d = det;
  if (sgn(d) < 0) {
    d = -d;
    for (auto& v : y) v = -v;
  }
  return Cyclotomic(level_, std::move(y), std::move(d));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (level_ == 1) return *this;
  if (std::gcd(a, level_) != 1) throw PreconditionError("galois exponent must be coprime to the level");
  const LevelData& d = Tables::instance().level(level_);
  std::vector<Integer> out(num_.size(), Integer(0));
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) == 0) continue;
    const auto& row = d.powmod[static_cast<std::size_t>(mod_pos(a * static_cast<long>(e), level_))];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) addmul(out[j], num_[e], row[j]);
  }
  return Cyclotomic(level_, std::move(out), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::string Cyclotomic::to_string() const {
  if (level_ == 1) return quadpow::to_string(coord(0));
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) == 0) continue;
    Rational q = coord(e);
    std::string unit;
    if (e != 0) {
      if (level_ == 4 && e == 1)
        unit = "i";
      else if (level_ == 3 && e == 1)
        unit = "omega";
      else
        unit = "zeta(" + std::to_string(level_) + "," + std::to_string(e) + ")";
    }
    const bool neg = sgn(q) < 0;
    Rational aq = abs(q);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (unit.empty())
      os << quadpow::to_string(aq);
    else if (aq == 1)
      os << unit;
    else
      os << quadpow::to_string(aq) << "*" << unit;
  }
  return os.str();
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> acc = 0;
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (sgn(num_[e]) == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(level_);
    acc += coord(e).get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

}  // namespace quadpow
