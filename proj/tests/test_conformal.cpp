#include "hyperconic/conformal.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hyperconic/errors.hpp"
#include "support/testutil.hpp"

using namespace hyperconic;

TEST_CASE("null basis relations derived from the orthonormal pair") {
  for (int m : {2, 3}) {
    Multivector inf = e_infinity(m);
    Multivector origin = e_origin(m);
    CHECK(inner_scalar(inf, inf) == doctest::Approx(0.0));
    CHECK(inner_scalar(origin, origin) == doctest::Approx(0.0));
    CHECK(inner_scalar(inf, origin) == doctest::Approx(-1.0));

    Signature sig = conformal_signature(m);
    Multivector e_plus = Multivector::basis_vector(sig, m + 1);
    Multivector e_minus = Multivector::basis_vector(sig, m + 2);
    CHECK(inner_scalar(e_plus, e_plus) == doctest::Approx(1.0));
    CHECK(inner_scalar(e_minus, e_minus) == doctest::Approx(-1.0));
  }
}

TEST_CASE("lift is a null vector with unit origin component") {
  // The origin lifts to e_o exactly.
  ConformalPoint at_origin = lift(std::vector<double>{0.0, 0.0});
  CHECK((at_origin.coords - e_origin(2)).is_zero());

  ConformalPoint unit_x = lift(std::vector<double>{1.0, 0.0});
  Signature sig = conformal_signature(2);
  Multivector expected = Multivector::basis_vector(sig, 1) +
                         0.5 * e_infinity(2) + e_origin(2);
  CHECK((unit_x.coords - expected).norm() <= 1e-15);
  CHECK(std::abs(inner_scalar(unit_x.coords, unit_x.coords)) <= 1e-12);

  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    std::vector<double> x = testutil::random_point(rng, m, -5.0, 5.0);
    Multivector lifted = lift(x).coords;
    CHECK(std::abs(inner_scalar(lifted, lifted)) <=
          1e-12 * (1.0 + lifted.norm() * lifted.norm()));
    // e_o component is unity: coefficient pattern (s/2 - 1/2, s/2 + 1/2).
    std::vector<double> coords = lifted.vector_coords();
    CHECK(coords[m + 1] - coords[m] == doctest::Approx(1.0));
  }
}

TEST_CASE("sphere vector vanishes exactly on its sphere") {
  SphereVector unit(std::vector<double>{0.0, 0.0}, 1.0);
  Multivector on_point = lift(std::vector<double>{1.0, 0.0}).coords;
  CHECK(std::abs(inner_scalar(unit.as_multivector(), on_point)) <= 1e-12);

  SphereVector shifted(std::vector<double>{1.0, 0.0}, 2.0);
  Multivector boundary = lift(std::vector<double>{3.0, 0.0}).coords;
  CHECK(std::abs(inner_scalar(shifted.as_multivector(), boundary)) <= 1e-12);

  // Inside the unit sphere the inner product is (rho^2 - d^2)/2 = 1/2.
  Multivector center = lift(std::vector<double>{0.0, 0.0}).coords;
  CHECK(inner_scalar(unit.as_multivector(), center) == doctest::Approx(0.5));

  CHECK_THROWS_AS(SphereVector(std::vector<double>{0.0, 0.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SphereVector(std::vector<double>{0.0, 0.0}, -1.0),
                  std::invalid_argument);
}

TEST_CASE("sphere_side sign cases") {
  SphereVector unit(std::vector<double>{0.0, 0.0}, 1.0);
  CHECK(sphere_side(unit, std::vector<double>{0.0, 0.0}) > 0.0);
  CHECK(sphere_side(unit, std::vector<double>{1.0, 0.0}) ==
        doctest::Approx(0.0));
  CHECK(sphere_side(unit, std::vector<double>{5.0, 0.0}) < 0.0);
}

TEST_CASE("sphere_side is scale-invariant and matches the distance test") {
  std::mt19937_64 rng(149);
  int boundary_skips = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int m = 2 + static_cast<int>(rng() % 2);
    std::vector<double> center = testutil::random_point(rng, m, -3.0, 3.0);
    double radius = testutil::uniform(rng, 0.1, 3.0);
    std::vector<double> x = testutil::random_point(rng, m, -4.0, 4.0);

    double dist_sq = 0.0;
    for (int i = 0; i < m; ++i) {
      dist_sq += (x[i] - center[i]) * (x[i] - center[i]);
    }
    double reference = radius * radius - dist_sq;

    SphereVector s(center, radius);
    double side = sphere_side(s, x);
    if (std::abs(side) <= 1e-9) {
      ++boundary_skips;
      continue;
    }
    CHECK((side > 0.0) == (reference > 0.0));

    // The normalizer makes the sign immune to rescaling the sphere vector.
    double scaled =
        sphere_side(testutil::uniform(rng, -4.0, -0.5) * s.as_multivector(), x);
    CHECK((scaled > 0.0) == (side > 0.0));
  }
  CHECK(boundary_skips < 10);
}

TEST_CASE("a flat vector has no sphere side") {
  // A plane has no e_o part, so S . e_inf vanishes.
  Signature sig = conformal_signature(2);
  Multivector plane = Multivector::basis_vector(sig, 1) + 2.0 * e_infinity(2);
  std::vector<double> x{0.3, 0.4};
  CHECK_THROWS_AS(sphere_side(plane, x), degeneracy_error);
}
