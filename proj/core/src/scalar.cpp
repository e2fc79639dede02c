#include "quadpow/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "quadpow/errors.hpp"

namespace quadpow {
namespace {

std::string coeff_times(const Cyclotomic& c, const std::string& unit, bool first) {
  // Returns the signed term "c*unit" with a leading " + " / " - " unless first.
  std::string sign;
  std::string body;
  if (c.is_rational()) {
    Rational q = c.rational_value();
    const bool neg = sgn(q) < 0;
    Rational aq = abs(q);
    sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (unit.empty())
      body = to_string(aq);
    else if (aq == 1)
      body = unit;
    else
      body = to_string(aq) + "*" + unit;
  } else {
    sign = first ? "" : " + ";
    std::string cs = c.to_string();
    body = "(" + cs + ")";
    if (!unit.empty()) body += "*" + unit;
  }
  return sign + body;
}

}  // namespace

std::string cpoly_to_string(const CPoly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Cyclotomic& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.zero()) continue;
    std::string unit;
    if (k == 1)
      unit = var;
    else if (k > 1)
      unit = var + "^" + std::to_string(k);
    out += coeff_times(c, unit, first);
    first = false;
  }
  return out;
}

Modulus::Modulus(CPoly m) : m_(std::move(m)), text_(cpoly_to_string(m_)) {}

ModulusPtr Modulus::intern(const CPoly& m) {
  static std::mutex mu;
  static std::map<std::string, ModulusPtr> table;
  auto mod = std::make_shared<const Modulus>(m.monic());
  std::lock_guard lock(mu);
  auto [it, inserted] = table.try_emplace(mod->text(), mod);
  return it->second;
}

ModulusPtr common_modulus(const ModulusPtr& a, const ModulusPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw IncompatibleModulus();
}

AlgebraicScalar::AlgebraicScalar(ModulusPtr mod, CPoly value) : mod_(std::move(mod)), v_(std::move(value)) {
  if (mod_ && v_.degree() >= mod_->degree()) v_ = v_ % mod_->poly();
}

AlgebraicScalar AlgebraicScalar::root_of(const CPoly& p) {
  if (p.degree() < 1) throw PreconditionError("root() of a constant polynomial");
  CPoly m = squarefree_part(p);
  if (m.degree() == 1) return AlgebraicScalar(-m.coeff(0));
  return AlgebraicScalar(Modulus::intern(m), CPoly::var());
}

Cyclotomic AlgebraicScalar::cyclotomic_value() const {
  if (!is_cyclotomic()) throw PreconditionError("value depends on an adjoined root");
  return v_.coeff(0);
}

bool AlgebraicScalar::is_rational() const { return is_cyclotomic() && v_.coeff(0).is_rational(); }

Rational AlgebraicScalar::rational_value() const {
  if (!is_rational()) throw PreconditionError("value is not rational");
  return v_.coeff(0).rational_value();
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar r;
  r.mod_ = mod_;
  r.v_ = -v_;
  return r;
}

AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  AlgebraicScalar r;
  r.mod_ = common_modulus(a.mod_, b.mod_);
  r.v_ = a.v_ + b.v_;
  return r;
}

AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  AlgebraicScalar r;
  r.mod_ = common_modulus(a.mod_, b.mod_);
  r.v_ = a.v_ - b.v_;
  return r;
}

AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  AlgebraicScalar r;
  r.mod_ = common_modulus(a.mod_, b.mod_);
  if (a.v_.degree() <= 0) {
    r.v_ = a.zero() ? CPoly() : b.v_.scaled(a.v_.coeff(0));
  } else if (b.v_.degree() <= 0) {
    r.v_ = b.zero() ? CPoly() : a.v_.scaled(b.v_.coeff(0));
  } else {
    r.v_ = a.v_ * b.v_;
    if (r.mod_ && r.v_.degree() >= r.mod_->degree()) r.v_ = r.v_ % r.mod_->poly();
  }
  return r;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (zero()) throw DivisionByZero();
  if (v_.degree() == 0) {
    AlgebraicScalar r;
    r.mod_ = mod_;
    r.v_ = CPoly(v_.coeff(0).inverse());
    return r;
  }
  auto eg = ext_gcd(v_, mod_->poly());
  if (eg.g.degree() > 0) throw ZeroDivisorError(cpoly_to_string(eg.g));
  return AlgebraicScalar(mod_, eg.s);
}

AlgebraicScalar operator/(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  common_modulus(a.mod_, b.mod_);
  return a * b.inverse();
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (a.mod_ && b.mod_ && a.mod_ != b.mod_) return a.is_cyclotomic() && b.is_cyclotomic() && a.v_ == b.v_;
  return a.v_ == b.v_;
}

AlgebraicScalar AlgebraicScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraicScalar result(1L), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string AlgebraicScalar::to_string() const {
  if (v_.zero()) return "0";
  if (v_.degree() == 0) return v_.coeff(0).to_string();
  const std::string root = "root(" + mod_->text() + ")";
  std::string out;
  bool first = true;
  for (int k = 0; k <= v_.degree(); ++k) {
    const Cyclotomic& c = v_.coeffs()[static_cast<std::size_t>(k)];
    if (c.zero()) continue;
    std::string unit;
    if (k == 1)
      unit = root;
    else if (k > 1)
      unit = root + "^" + std::to_string(k);
    out += coeff_times(c, unit, first);
    first = false;
  }
  return out;
}

}  // namespace quadpow
