#include "quadpow/dependence.hpp"

#include <algorithm>

namespace quadpow {

FormSet PowerIdentity::forms() const {
  FormSet out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.form);
  return out;
}

int PowerIdentity::form_degree() const { return terms.empty() ? 0 : terms.front().form.degree(); }

std::string PowerIdentity::to_string() const {
  std::string lhs, rhs;
  for (const auto& t : terms) {
    std::string s = "(" + t.lambda.to_string() + ")*(" + t.form.to_string() + ")^" + std::to_string(d);
    std::string& side = t.side == Side::Left ? lhs : rhs;
    side += side.empty() ? s : " + " + s;
  }
  return (lhs.empty() ? "0" : lhs) + " = " + (rhs.empty() ? "0" : rhs);
}

PowerIdentity make_identity(long d, const std::vector<Scalar>& lambdas, const FormSet& forms) {
  if (lambdas.size() != forms.size()) throw PreconditionError("lambda and form counts differ");
  PowerIdentity id;
  id.d = d;
  for (std::size_t j = 0; j < forms.size(); ++j) id.terms.push_back({lambdas[j], forms[j], Side::Left});
  return id;
}

namespace {

void require_common_degree(const FormSet& forms) {
  for (const auto& f : forms)
    if (f.degree() != forms.front().degree()) throw PreconditionError("forms have different degrees");
}

}  // namespace

Matrix<Scalar> power_matrix(const FormSet& forms, long d) {
  if (d < 1) throw PreconditionError("exponent must be positive");
  if (forms.empty()) return {};
  require_common_degree(forms);
  const std::size_t rows = static_cast<std::size_t>(forms.front().degree() * d + 1);
  Matrix<Scalar> m(rows, std::vector<Scalar>(forms.size(), Scalar(0L)));
  for (std::size_t j = 0; j < forms.size(); ++j) {
    BinaryForm p = form_power(forms[j], d, PowerMethod::Auto);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = p.coeff(static_cast<int>(i));
  }
  return m;
}

DependenceReport power_kernel(const FormSet& forms, long d) {
  HonestyReport h = honest(forms);
  if (!h.honest)
    throw PreconditionError("form set is not honest: forms " + std::to_string(h.first) + " and " +
                            std::to_string(h.second) + " are proportional");
  DependenceReport rep;
  rep.r = forms.size();
  if (forms.empty()) return rep;
  Matrix<Scalar> m = power_matrix(forms, d);
  rep.kernel = kernel(m, forms.size());
  rep.rank = rep.r - rep.kernel.size();
  return rep;
}

BinaryForm residual(const PowerIdentity& id) {
  if (id.terms.empty()) return BinaryForm(0);
  require_common_degree(id.forms());
  BinaryForm acc(static_cast<int>(id.form_degree() * id.d));
  for (const auto& t : id.terms) {
    const Scalar l = t.signed_lambda();
    if (l.zero()) continue;
    acc += form_power(t.form, id.d, PowerMethod::Auto).scaled(l);
  }
  return acc;
}

VerifyResult verify_identity(const PowerIdentity& id) {
  BinaryForm r = residual(id);
  if (r.zero()) return {true, std::nullopt};
  return {false, std::move(r)};
}

PowerIdentity flip(const PowerIdentity& id, const std::vector<std::size_t>& move) {
  if (id.terms.size() < 2) throw PreconditionError("flip needs at least two terms");
  PowerIdentity out = id;
  std::vector<bool> seen(id.terms.size(), false);
  for (auto j : move) {
    if (j >= id.terms.size()) throw PreconditionError("flip index out of range");
    if (seen[j]) throw PreconditionError("flip index repeated");
    seen[j] = true;
    auto& t = out.terms[j];
    t.lambda = -t.lambda;
    t.side = t.side == Side::Left ? Side::Right : Side::Left;
  }
  return out;
}

PowerIdentity cousin_apply(const PowerIdentity& id, const std::vector<std::size_t>& pi, const std::vector<Scalar>& c,
                           const LinearChange& m) {
  const std::size_t r = id.terms.size();
  if (pi.size() != r || c.size() != r) throw PreconditionError("permutation and scalar lists must match the term count");
  std::vector<std::size_t> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < r; ++j)
    if (sorted[j] != j) throw PreconditionError("not a permutation");
  if (!m.invertible()) throw PreconditionError("singular linear change");
  PowerIdentity out;
  out.d = id.d;
  for (std::size_t j = 0; j < r; ++j) {
    if (c[j].zero()) throw PreconditionError("cousin scalars must be nonzero");
    const PowerTerm& src = id.terms[pi[j]];
    out.terms.push_back({src.lambda * c[j].pow(-id.d), compose(src.form, m).scaled(c[j]), src.side});
  }
  return out;
}

std::vector<PowerSum> power_sum_check(const FormSet& forms, const std::vector<long>& exps) {
  if (!forms.empty()) require_common_degree(forms);
  std::vector<PowerSum> out;
  for (long e : exps) {
    if (e < 1) throw PreconditionError("exponent must be positive");
    BinaryForm acc(forms.empty() ? 0 : static_cast<int>(forms.front().degree() * e));
    for (const auto& f : forms) acc += form_power(f, e, PowerMethod::Auto);
    out.push_back({e, acc.zero(), acc});
  }
  return out;
}

}  // namespace quadpow
