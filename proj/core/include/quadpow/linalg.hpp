#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quadpow/errors.hpp"
#include "quadpow/poly.hpp"
#include "quadpow/scalar.hpp"

namespace quadpow {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Exact division by a fixed divisor.
template <class S>
struct ExactDivider;

template <>
struct ExactDivider<Scalar> {
  explicit ExactDivider(const Scalar& d) : inv(d.inverse()) {}
  Scalar operator()(const Scalar& a) const { return a * inv; }
  Scalar inv;
};

template <class R>
struct ExactDivider<Poly<R>> {
  explicit ExactDivider(const Poly<R>& d) : div(d) {}
  Poly<R> operator()(const Poly<R>& a) const {
    if (div.degree() == 0) return a.scaled(R(1) / div.lead());
    auto [q, r] = divmod(a, div);
    if (!r.zero()) throw PreconditionError("inexact polynomial division");
    return q;
  }
  Poly<R> div;
};

/// Fraction-free (Bareiss) row echelon form, in place.
struct Echelon {
  std::vector<std::size_t> pivots;  // pivot column of each leading row
  int sign = 1;                     // parity of row swaps
};

template <class S>
Echelon bareiss(Matrix<S>& a) {
  Echelon out;
  const std::size_t n = a.size();
  if (n == 0) return out;
  const std::size_t m = a[0].size();
  ExactDivider<S> divide{S(1L)};
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) continue;
    if (piv != row) {
      std::swap(a[piv], a[row]);
      out.sign = -out.sign;
    }
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        S v = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        a[i][j] = is_zero(v) ? v : divide(v);
      }
      a[i][col] = S(0L);
    }
    divide = ExactDivider<S>(a[row][col]);
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class S>
std::size_t rank(Matrix<S> a) {
  return bareiss(a).pivots.size();
}

template <class S>
S determinant(Matrix<S> a) {
  const std::size_t n = a.size();
  if (n == 0) return S(1L);
  for (const auto& r : a)
    if (r.size() != n) throw PreconditionError("determinant needs a square matrix");
  Echelon e = bareiss(a);
  if (e.pivots.size() < n) return S(0L);
  return e.sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

/// Kernel basis over the scalar field; each vector scaled so its first nonzero entry is 1.
inline std::vector<std::vector<Scalar>> kernel(Matrix<Scalar> a, std::size_t cols) {
  for (const auto& r : a)
    if (r.size() != cols) throw PreconditionError("ragged matrix");
  Echelon e = bareiss(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols, Scalar(0L));
    x[f] = Scalar(1L);
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t p = e.pivots[r];
      Scalar acc(0L);
      for (std::size_t j = p + 1; j < cols; ++j)
        if (!x[j].zero() && !a[r][j].zero()) acc += a[r][j] * x[j];
      x[p] = acc.zero() ? acc : -acc / a[r][p];
    }
    for (const auto& v : x)
      if (!v.zero()) {
        const Scalar inv = v.inverse();
        for (auto& w : x) w = w * inv;
        break;
      }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace quadpow
