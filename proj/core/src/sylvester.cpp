#include "quadpow/sylvester.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

namespace quadpow {

std::string to_string(DecompositionKind k) { return k == DecompositionKind::Generic ? "generic-h" : "ell-degenerate"; }

BinaryForm TwoPowerDecomposition::expand() const {
  return form_power(g1, d, PowerMethod::Auto).scaled(mu1) + form_power(g2, d, PowerMethod::Auto).scaled(mu2);
}

Scalar kernel_discriminant(const KernelQuadratic& h) { return h[1] * h[1] - Scalar(4L) * h[0] * h[2]; }

SylvesterReport sylvester_matrix(const BinaryForm& p) {
  if (p.degree() % 2 != 0) throw PreconditionError("2-Sylvester test needs a form of even degree 2d");
  const long d = p.degree() / 2;
  if (d < 3) throw PreconditionError("2-Sylvester test needs d >= 3");
  if (!is_even(p)) throw PreconditionError("2-Sylvester test needs an even form");
  SylvesterReport rep;
  rep.d = d;
  for (long j = 0; j <= d; ++j)
    rep.a.push_back(p.coeff(static_cast<int>(2 * j)) * Scalar(Rational(1) / Rational(binomial(d, j))));
  for (long i = 0; i + 2 <= d; ++i)
    rep.matrix.push_back({rep.a[static_cast<std::size_t>(i)], rep.a[static_cast<std::size_t>(i + 1)],
                          rep.a[static_cast<std::size_t>(i + 2)]});
  for (auto& v : kernel(rep.matrix, 3)) {
    std::size_t last = 2;
    while (v[last].zero()) --last;
    const Scalar inv = v[last].inverse();
    rep.kernel.push_back({v[0] * inv, v[1] * inv, v[2] * inv});
  }
  rep.rank = 3 - rep.kernel.size();
  return rep;
}

namespace {

BinaryForm even_quadratic(const Scalar& a, const Scalar& c) { return quadratic(a, Scalar(0L), c); }

std::optional<TwoPowerDecomposition> decompose_with(const BinaryForm& p, const SylvesterReport& rep, const KernelQuadratic& h) {
  const Scalar disc = kernel_discriminant(h);
  if (disc.zero()) return std::nullopt;
  const long d = rep.d;
  const auto& a = rep.a;
  TwoPowerDecomposition out;
  out.d = d;
  out.h = h;
  if (!h[2].zero()) {
    const Scalar c1 = h[1] / h[2], c0 = h[0] / h[2];
    const Scalar s = sqrt_scalar(c1 * c1 - Scalar(4L) * c0);
    const Scalar half(Rational(1, 2));
    const Scalar g1 = (s - c1) * half, g2 = (-s - c1) * half;
    const Scalar l2 = (a[1] - g1 * a[0]) / (g2 - g1);
    const Scalar l1 = a[0] - l2;
    out.kind = DecompositionKind::Generic;
    out.mu1 = l1;
    out.mu2 = l2;
    out.g1 = even_quadratic(Scalar(1L), g1);
    out.g2 = even_quadratic(Scalar(1L), g2);
  } else {
    const Scalar g1 = -h[0] / h[1];
    out.kind = DecompositionKind::EllDegenerate;
    out.mu1 = a[0];
    out.mu2 = a[static_cast<std::size_t>(d)] - a[0] * g1.pow(d);
    out.g1 = even_quadratic(Scalar(1L), g1);
    out.g2 = even_quadratic(Scalar(0L), Scalar(1L));
  }
  if (out.mu1.zero() || out.mu2.zero()) return std::nullopt;
  if (proportional(out.g1, out.g2)) return std::nullopt;
  if (out.expand() != p) return std::nullopt;
  return out;
}

}  // namespace

std::vector<TwoPowerDecomposition> two_power_decompose(const BinaryForm& p) {
  SylvesterReport rep = sylvester_matrix(p);
  std::vector<TwoPowerDecomposition> out;
  if (rep.kernel.size() != 1) return out;
  if (auto dec = decompose_with(p, rep, rep.kernel.front())) out.push_back(std::move(*dec));
  return out;
}

EvenRepresentations enumerate_even_representations(const BinaryForm& p, long d) {
  if (p.degree() != 2 * d) throw PreconditionError("form degree must equal 2d");
  EvenRepresentations out;
  out.report = sylvester_matrix(p);
  if (out.report.kernel.size() >= 2) {
    out.family = true;
    out.family_dimension = out.report.kernel.size();
    return out;
  }
  if (out.report.kernel.size() == 1)
    if (auto dec = decompose_with(p, out.report, out.report.kernel.front())) out.decompositions.push_back(std::move(*dec));
  return out;
}

DiagonalizationResult simultaneous_diagonalize(const BinaryForm& f1, const BinaryForm& f2) {
  if (f1.degree() != 2 || f2.degree() != 2) throw PreconditionError("diagonalization needs two quadratics");
  if (f1.zero() || f2.zero()) throw PreconditionError("diagonalization needs nonzero quadratics");
  if (quad_gcd(f1, f2).degree != 0) throw PreconditionError("quadratics share a common factor");
  if (is_even(f1) && is_even(f2)) return {LinearChange::identity(), f1, f2};

  const Scalar half(Rational(1, 2)), quarter(Rational(1, 4));
  const Scalar &a1 = f1.coeff(0), &b1 = f1.coeff(1), &c1 = f1.coeff(2);
  const Scalar &a2 = f2.coeff(0), &b2 = f2.coeff(1), &c2 = f2.coeff(2);
  // det(s A1 - t A2) = P s^2 + Q s t + R t^2
  const Scalar P = a1 * c1 - b1 * b1 * quarter;
  const Scalar Q = -(a1 * c2 + a2 * c1 - b1 * b2 * half);
  const Scalar R = a2 * c2 - b2 * b2 * quarter;
  std::array<std::pair<Scalar, Scalar>, 2> roots;
  if (!R.zero()) {
    const Scalar s = sqrt_scalar(Q * Q - Scalar(4L) * P * R);
    const Scalar inv = (Scalar(2L) * R).inverse();
    roots = {std::pair{Scalar(1L), (s - Q) * inv}, std::pair{Scalar(1L), (-s - Q) * inv}};
  } else {
    roots = {std::pair{Scalar(0L), Scalar(1L)}, std::pair{-Q, P}};
  }
  std::array<std::pair<Scalar, Scalar>, 2> vecs;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& [s, t] = roots[k];
    const Scalar baa = s * a1 - t * a2, bab = (s * b1 - t * b2) * half, bbb = s * c1 - t * c2;
    std::pair<Scalar, Scalar> v = !(baa.zero() && bab.zero()) ? std::pair{bab, -baa} : std::pair{bbb, -bab};
    const Scalar lead = v.first.zero() ? v.second : v.first;
    const Scalar inv = lead.inverse();
    vecs[k] = {v.first * inv, v.second * inv};
  }
  LinearChange m{vecs[0].first, vecs[1].first, vecs[0].second, vecs[1].second};
  if (!m.invertible()) throw PreconditionError("pencil eigenvectors are dependent");
  DiagonalizationResult out{m, compose(f1, m), compose(f2, m)};
  if (!is_even(out.g1) || !is_even(out.g2)) throw std::logic_error("diagonalization did not produce even forms");
  return out;
}

}  // namespace quadpow
