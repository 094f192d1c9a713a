#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hyperconic/conic_space.hpp"
#include "hyperconic/errors.hpp"

namespace hyperconic {

enum class ConicKind {
  kEllipse,
  kHyperbola,
  kParabola,
  kDegenerate,
  kUnclassified,
};

const char* to_string(ConicKind kind);

/// Standard form of a plane conic (m = 2).
///  - ellipse:   semi_axes = (a, b), a >= b; rotation = major axis angle.
///  - hyperbola: semi_axes = (a, b) with a the transverse semi-axis;
///               rotation = transverse axis angle.
///  - parabola:  center is the vertex, semi_axes = (p, p) with p the focal
///               distance, rotation = symmetry axis angle.
/// Rotation is reported in (-pi/2, pi/2]. An ellipse without real points
/// reports the axes of its mirror locus (|k| in place of -k).
struct StandardForm {
  ConicKind kind = ConicKind::kUnclassified;
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> semi_axes{0.0, 0.0};
  double rotation = 0.0;

  /// Rendering such as "(x-4.005)^2/14.0868 + y^2/1.46432 = 1".
  std::string equation() const;
};

struct ConicFitResult {
  ConicVector conic;        // the dual vector, unit norm
  SymmetricMatrix matrix;   // tau_inv of it
  std::vector<double> residuals;  // incidence of each input point
};

/// Exact hyperconic through D - 1 points of R^m, D = (m+1)(m+2)/2: embed,
/// wedge into a (D-1)-blade, take the Clifford dual in signature (D, 0).
/// Throws degeneracy_error when the wedge norm falls below
/// 1e-10 x (product of the embedded norms).
ConicFitResult fit_exact(std::span<const std::vector<double>> points);

/// Independent route: the nullspace (>= D - 1 points required) of the
/// stacked incidence system, by Gaussian elimination with partial pivoting
/// when exactly determined, or the minimal-residual direction (smallest
/// eigenvector of M^T M) when overdetermined. Throws ambiguity_error when
/// the rank admits more than one conic.
ConicVector fit_oracle(std::span<const std::vector<double>> points);

/// Classify a 3x3 symmetric matrix: sign of delta = a11 a22 - a12^2 picks
/// ellipse/hyperbola/parabola, det A ~ 0 means degenerate; center from the
/// gradient system, axes and rotation from the leading 2x2 eigenpairs.
/// Throws degeneracy_error when the quadratic part is zero.
StandardForm classify_conic(const SymmetricMatrix& a);

namespace detail {

/// Eigen-decomposition of a small dense symmetric matrix by cyclic Jacobi
/// rotations. Returns eigenvalues ascending, with matching unit columns.
struct EigenResult {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs values[k]
};
EigenResult jacobi_eigen(const std::vector<std::vector<double>>& a);

}  // namespace detail

}  // namespace hyperconic
