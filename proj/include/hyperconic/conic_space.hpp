#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperconic/multivector.hpp"

namespace hyperconic {

/// Real symmetric n x n matrix, upper triangle stored once. Represents the
/// quadratic hypersurface x'^T A x' = 0 with x' = (x, 1) when n = m + 1.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n);
  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(std::span<const double> entries);

  int size() const { return n_; }
  double at(int i, int j) const;
  void set(int i, int j, double value);

  /// x'^T A x' for a full homogeneous coordinate vector of length n.
  double quadratic_form(std::span<const double> x_prime) const;

  double frobenius_norm() const;
  double det() const;
  double trace() const;

  SymmetricMatrix scaled(double c) const;
  friend SymmetricMatrix operator+(const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);

  /// Flat comma-separated row-major upper triangle, full precision.
  std::string to_csv_line() const;
  static SymmetricMatrix from_csv_line(const std::string& line);

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) =
      default;

 private:
  int index(int i, int j) const;

  int n_ = 0;
  std::vector<double> upper_;  // row-major upper triangle, i <= j
};

/// Flat coordinates of a hyperconic: length D = n(n+1)/2 in the canonical
/// monomial order (see monomial_order), diagonals carrying the 1/sqrt(2)
/// homothety. Interpretable as a grade-1 multivector in signature (D, 0).
class ConicVector {
 public:
  ConicVector() = default;
  explicit ConicVector(std::vector<double> coords);

  int dimension() const { return static_cast<int>(coords_.size()); }
  int matrix_size() const { return n_; }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }

  double norm() const;
  ConicVector normalized() const;
  double dot(const ConicVector& other) const;

  Multivector to_multivector() const;

  std::string to_csv_line() const;
  static ConicVector from_csv_line(const std::string& line);

 private:
  int n_ = 0;
  std::vector<double> coords_;
};

/// A Euclidean point together with its lifted coordinates tau(iota(x)).
struct EmbeddedPoint {
  std::vector<double> source;
  ConicVector coords;
};

/// The m + 1 coordinate positions (1-based) carrying the sqrt(2) homothety:
/// s(0) = m+1, s(1) = m+2, s(l) = s(l-1) + l - 1. These are exactly the
/// positions of the squared monomials and the constant in the canonical
/// order.
struct IndexSet {
  int m = 0;
  std::vector<int> positions;
};

/// Canonical order of the upper-triangle index pairs (0-based, i <= j)
/// backing every flat conic coordinate vector: first column n-1 from the
/// top, then the corner, then per column c = 0..n-2 the diagonal followed by
/// the entries walking up.
std::vector<std::pair<int, int>> monomial_order(int n);

/// Linear isomorphism from symmetric matrices to flat coordinates: entries
/// in canonical order, diagonals divided by sqrt(2).
ConicVector tau(const SymmetricMatrix& a);

/// Inverse of tau; input length must be triangular. Diagonals are sqrt(2)
/// times the corresponding coordinate.
SymmetricMatrix tau_inv(const ConicVector& v);

/// Rank-one lift x -> x'^T x' with x' = (x, 1).
SymmetricMatrix iota(std::span<const double> x);

/// The embedding x -> tau(iota(x)); for m = 2 this is
/// (x1, x2, 1/sqrt2, x1^2/sqrt2, x2^2/sqrt2, x1 x2).
EmbeddedPoint embed_point(std::span<const double> x);

/// Signed incidence value tau(iota(x)) . tau(A) == x'^T A x' / 2. Zero means
/// x lies on the hyperconic; the sign tells the side (positive where
/// x'^T A x' > 0).
double incidence(std::span<const double> x, const SymmetricMatrix& a);

/// Degree-2 monomials of a homogeneous point (length m+1, last coordinate 1)
/// in the canonical order: (x1, ..., xm, 1, x1^2, x2^2, x1 x2, ...).
std::vector<double> veronese(std::span<const double> x_homogeneous, int m);

IndexSet index_set(int m);

/// Multiplies exactly the coordinates indexed by the set (1-based) by
/// sqrt(2); carries an embedded coordinate vector onto the monomial one.
std::vector<double> chart_T(std::span<const double> v, const IndexSet& s);

/// Forget scale: returns a representative of the projective point (input
/// must be nonzero).
std::vector<double> chart_p(std::span<const double> v);

/// Drop the homogenizing coordinate: (z1, ..., zm, 1) -> (z1, ..., zm).
std::vector<double> chart_q(std::span<const double> z);

/// True when u and v agree as projective points: after scaling v by the
/// ratio of the largest-magnitude coordinates, every coordinate matches to
/// |diff| <= tol * max(1, |coordinate|).
bool projective_equal(std::span<const double> u, std::span<const double> v,
                      double tol);

}  // namespace hyperconic
