#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "quadpow/forms.hpp"
#include "quadpow/linalg.hpp"

namespace quadpow {

/// Kernel quadratic h(u, v) = c0 u^2 + c1 u v + c2 v^2.
using KernelQuadratic = std::array<Scalar, 3>;

struct SylvesterReport {
  long d = 0;
  std::vector<Scalar> a;  // a_j = coeff(2j) / binom(d, j)
  Matrix<Scalar> matrix;  // (d-1) x 3, rows (a_i, a_{i+1}, a_{i+2})
  std::size_t rank = 0;
  std::vector<KernelQuadratic> kernel;  // last nonzero coordinate scaled to 1
};

/// Even forms of degree 2d with d >= 3 only.
SylvesterReport sylvester_matrix(const BinaryForm& p);

enum class DecompositionKind { Generic, EllDegenerate };
std::string to_string(DecompositionKind k);

/// p = mu1 * g1^d + mu2 * g2^d with g1, g2 even quadratics.
struct TwoPowerDecomposition {
  DecompositionKind kind = DecompositionKind::Generic;
  long d = 0;
  Scalar mu1, mu2;
  BinaryForm g1, g2;
  KernelQuadratic h;

  BinaryForm expand() const;
};

/// Discriminant c1^2 - 4 c0 c2; nonzero means h is not a square.
Scalar kernel_discriminant(const KernelQuadratic& h);

std::vector<TwoPowerDecomposition> two_power_decompose(const BinaryForm& p);

struct EvenRepresentations {
  SylvesterReport report;
  std::vector<TwoPowerDecomposition> decompositions;
  /// Kernel of dimension >= 2: infinitely many candidates, none enumerated.
  bool family = false;
  std::size_t family_dimension = 0;
};
EvenRepresentations enumerate_even_representations(const BinaryForm& p, long d);

struct DiagonalizationResult {
  LinearChange m;
  BinaryForm g1, g2;
};
/// Linear change making two coprime quadratics even at once.
DiagonalizationResult simultaneous_diagonalize(const BinaryForm& f1, const BinaryForm& f2);

}  // namespace quadpow
