#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadpow/dependence.hpp"

namespace quadpow {

struct ThetaValue {
  long value = 0;
  long t = 0;
};

/// 1 + min over t of (t d / e + floor(e / t)); ties go to the smaller t.
ThetaValue theta(long e, long d);

struct Bound {
  long value = 0;
  std::string source;
};

struct PhiBounds {
  long k = 0, d = 0;
  Bound lower, upper;
  std::optional<long> exact;
  std::vector<Bound> lower_candidates, upper_candidates;
};

PhiBounds phi_bounds(long k, long d);

enum class Parity { Odd, Even };

/// Coefficient polynomial in alpha of x^(2d-i) y^i in Psi(0, s+1, d; alpha),
/// with d = 2s+1, i = s (odd) or d = 2s, i = s-1 (even).
QPoly a_poly(long s, Parity parity);

namespace recipe {
struct Molluzzo {
  long e = 1, e_prime = 1, t = 1;
};
struct Monomial {
  long s = 1;
};
struct Quadrature {
  long s = 1;
  std::complex<double> theta;
};
struct PsiOdd {
  long s = 2;
};
struct PsiEven {
  long s = 3;
};
struct Icosa14 {};
struct Catalog {
  std::string name;
};
}  // namespace recipe

using ConstructionRecipe = std::variant<recipe::Molluzzo, recipe::Monomial, recipe::Quadrature, recipe::PsiOdd,
                                        recipe::PsiEven, recipe::Icosa14, recipe::Catalog>;

std::string recipe_name(const ConstructionRecipe& r);

struct NumericCheck {
  std::size_t terms = 0;
  double max_residual = 0;  // largest coefficient of the residual, relative
  double tolerance = 0;
  bool pass = false;
};

struct Construction {
  std::string recipe;
  std::size_t term_count = 0;
  std::string description;
  std::optional<PowerIdentity> identity;  // exact recipes
  std::optional<NumericCheck> numeric;    // quadrature
};

Construction build(const ConstructionRecipe& r);

inline constexpr double kQuadratureTolerance = 1e-10;

/// (1/(s+1)) sum_j (cos(j pi/(s+1) + theta) u + sin(j pi/(s+1) + theta) v)^(2s)
///   = 2^(-2s) binom(2s, s) (u^2 + v^2)^s  at u = x^2 - y^2, v = 2xy.
NumericCheck quadrature_check(long s, std::complex<double> theta);

struct IcosaSpecial {
  QPoly a, b;
  QPoly common_factor;  // monic gcd of a and b
  bool divisible_by_one_plus_alpha_sq = false;
  PowerIdentity specialized;  // alpha = i
};
IcosaSpecial icosa_special();

/// g_j = c_j (f_{pi(j)} o M) replayed from another catalog entry.
struct CousinWitness {
  std::string source;
  std::vector<std::size_t> pi;
  std::vector<Scalar> c;
  LinearChange m;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  PowerIdentity identity;
  /// Further identities built from the same forms (extra representations).
  std::vector<PowerIdentity> related;
  /// Common value of the left-hand side of every representation, when known.
  std::optional<BinaryForm> value;
  std::optional<CousinWitness> cousin;
};

std::vector<std::string> catalog_names();
/// Throws PreconditionError listing the available names.
const CatalogEntry& catalog_entry(const std::string& name);
PowerIdentity catalog(const std::string& name);

/// Three-representation cubic family at a parameter alpha not in {0, 1, -1}.
CatalogEntry threefold(const Scalar& alpha);
/// Its rational real form.
CatalogEntry threefold_real(const Scalar& alpha);

struct EntryCheck {
  bool identity = false;
  bool related = true;
  bool value = true;
  bool cousin = true;
  bool pass() const { return identity && related && value && cousin; }
};
EntryCheck check_entry(const CatalogEntry& e);

/// Sum of the left-hand terms lambda f^d.
BinaryForm left_value(const PowerIdentity& id);

/// Same forms in order with signed coefficients proportional by one constant.
bool same_up_to_scale(const PowerIdentity& a, const PowerIdentity& b);

/// Searches pi and c so that c_j (f_{pi(j)} o M) equals the j-th form of target.
std::optional<CousinWitness> match_cousin(const PowerIdentity& source, const PowerIdentity& target, const LinearChange& m);

}  // namespace quadpow
