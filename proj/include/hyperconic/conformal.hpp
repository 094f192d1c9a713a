#pragma once

#include <span>
#include <vector>

#include "hyperconic/multivector.hpp"

namespace hyperconic {

/// Conformal model of R^m, built over the non-degenerate signature
/// (m+1, 1) with basis e_1..e_m, e_plus (index m+1, squares +1) and
/// e_minus (index m+2, squares -1). The null directions
///   e_inf = e_minus + e_plus,   e_o = (e_minus - e_plus) / 2
/// satisfy e_inf^2 = e_o^2 = 0 and e_inf . e_o = -1, and are the API-level
/// basis; storage stays on the orthonormal pair.
Signature conformal_signature(int m);

Multivector e_infinity(int m);
Multivector e_origin(int m);

/// A lifted Euclidean point X = x + x^2/2 e_inf + e_o: a null vector with
/// unit e_o component.
struct ConformalPoint {
  std::vector<double> source;
  Multivector coords;
};

ConformalPoint lift(std::span<const double> x);

/// Grade-1 vector S = lift(center) - rho^2/2 e_inf, whose inner product with
/// a lifted point vanishes exactly on the sphere |y - center| = rho.
class SphereVector {
 public:
  SphereVector(std::span<const double> center, double radius);

  const std::vector<double>& center() const { return center_; }
  double radius() const { return radius_; }
  const Multivector& as_multivector() const { return coords_; }

 private:
  std::vector<double> center_;
  double radius_ = 0.0;
  Multivector coords_;
};

SphereVector sphere(std::span<const double> center, double radius);

/// Scalar inner product of two grade-1 conformal vectors.
double inner_scalar(const Multivector& a, const Multivector& b);

/// Normalized sign value S.X / ((S.e_inf)(X.e_inf)): positive inside, zero
/// on, negative outside the sphere. Throws degeneracy_error when the
/// normalizer vanishes (a flat, not a sphere).
double sphere_side(const Multivector& sphere_vec, std::span<const double> x);
double sphere_side(const SphereVector& s, std::span<const double> x);

}  // namespace hyperconic
