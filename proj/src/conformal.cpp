#include "hyperconic/conformal.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperconic/errors.hpp"

namespace hyperconic {

Signature conformal_signature(int m) {
  if (m < 1 || m + 2 > kMaxDimension) {
    throw std::invalid_argument("conformal model requires 1 <= m <= " +
                                std::to_string(kMaxDimension - 2));
  }
  return Signature(m + 1, 1);
}

Multivector e_infinity(int m) {
  Signature sig = conformal_signature(m);
  return Multivector::basis_vector(sig, m + 2) +
         Multivector::basis_vector(sig, m + 1);
}

Multivector e_origin(int m) {
  Signature sig = conformal_signature(m);
  return 0.5 * (Multivector::basis_vector(sig, m + 2) -
                Multivector::basis_vector(sig, m + 1));
}

ConformalPoint lift(std::span<const double> x) {
  int m = static_cast<int>(x.size());
  Signature sig = conformal_signature(m);
  double sq = 0.0;
  for (double c : x) sq += c * c;
  // x + (sq/2) e_inf + e_o, written out on the e_plus/e_minus pair.
  std::vector<double> coords(x.begin(), x.end());
  coords.push_back(0.5 * sq - 0.5);  // e_plus
  coords.push_back(0.5 * sq + 0.5);  // e_minus
  return ConformalPoint{std::vector<double>(x.begin(), x.end()),
                        Multivector::vector(sig, coords)};
}

SphereVector::SphereVector(std::span<const double> center, double radius)
    : center_(center.begin(), center.end()),
      radius_(radius),
      coords_(conformal_signature(static_cast<int>(center.size()))) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("sphere radius must be positive");
  }
  int m = static_cast<int>(center.size());
  coords_ = lift(center).coords - (0.5 * radius * radius) * e_infinity(m);
}

SphereVector sphere(std::span<const double> center, double radius) {
  return SphereVector(center, radius);
}

double inner_scalar(const Multivector& a, const Multivector& b) {
  return inner_product(a, b).scalar_part();
}

double sphere_side(const Multivector& sphere_vec, std::span<const double> x) {
  int m = static_cast<int>(x.size());
  if (!(sphere_vec.signature() == conformal_signature(m))) {
    throw std::invalid_argument("sphere vector signature does not match the point");
  }
  Multivector lifted = lift(x).coords;
  Multivector inf = e_infinity(m);
  double s_inf = inner_scalar(sphere_vec, inf);
  double x_inf = inner_scalar(lifted, inf);
  double denom = s_inf * x_inf;
  if (std::abs(denom) <= 1e-12 * sphere_vec.norm() * lifted.norm()) {
    throw degeneracy_error("vanishing normalizer: sphere vector is flat or degenerate");
  }
  return inner_scalar(sphere_vec, lifted) / denom;
}

double sphere_side(const SphereVector& s, std::span<const double> x) {
  return sphere_side(s.as_multivector(), x);
}

}  // namespace hyperconic
