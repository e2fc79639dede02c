#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quadpow/dependence.hpp"
#include "quadpow/forms.hpp"

namespace quadpow {

/// Root t/s of a linear factor s x - t y; s = 0 is the point at infinity.
struct ProjectiveRoot {
  bool infinite = false;
  std::complex<double> z;
  double error_bound = 0;  // absolute bound on |z - root|, finite roots only
  std::string re, im;      // decimal digits at the requested precision

  static ProjectiveRoot at_infinity() {
    ProjectiveRoot r;
    r.infinite = true;
    return r;
  }
  static ProjectiveRoot finite(std::complex<double> z, double err = 0) {
    ProjectiveRoot r;
    r.z = z;
    r.error_bound = err;
    return r;
  }
};

using KleinPoint = std::array<double, 3>;

/// T(z) = (delta z - beta) / (-gamma z + alpha).
struct MobiusTransform {
  std::complex<double> alpha{1}, beta{0}, gamma{0}, delta{1};

  ProjectiveRoot operator()(const ProjectiveRoot& z) const;
};

/// Roots with multiplicity, degree-many. Throws PreconditionError on the zero form.
std::vector<ProjectiveRoot> roots_of_form(const BinaryForm& f, long precision = 128);

/// Stereographic image; 0 goes to the south pole, infinity to the north pole.
KleinPoint klein_point(const ProjectiveRoot& r);
std::vector<KleinPoint> klein_set(const FormSet& forms, long precision = 128);
std::vector<KleinPoint> klein_set(const PowerIdentity& id, long precision = 128);

/// Transform induced on roots by f -> compose(f, m). Throws on singular m.
MobiusTransform mobius_of_change(const LinearChange& m);

double chordal_distance(const KleinPoint& a, const KleinPoint& b);

enum class KleinShape { Octahedron, Cube, Icosahedron, PrismWithPoles, Unknown };

struct KleinLabel {
  KleinShape shape = KleinShape::Unknown;
  int m = 0;  // ring size for PrismWithPoles
  double residual = 0;  // worst point distance after the fitted rotation
  std::string to_string() const;
};

/// Matches a configuration of 4 to 30 points against reference polytopes up
/// to rotation. A prism with poles is two antipodal points plus one regular
/// m-gon on the equator or two aligned ones at opposite latitudes.
KleinLabel recognize(const std::vector<KleinPoint>& points, double tol = 1e-6);

/// Reference vertex sets, unit norm.
std::vector<KleinPoint> octahedron_vertices();
std::vector<KleinPoint> cube_vertices();
std::vector<KleinPoint> icosahedron_vertices();

}  // namespace quadpow
