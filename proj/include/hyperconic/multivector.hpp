#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperconic {

/// Hard cap on the algebra dimension p + q. Blade masks are stored in a
/// 32-bit word, so this can be raised to 31 if a build ever needs it.
inline constexpr int kMaxDimension = 16;

/// Coefficients with absolute value at or below this are dropped whenever a
/// multivector is canonicalized.
inline constexpr double kCoefficientEpsilon = 1e-14;

/// Default relative tolerance for the null-space membership predicates.
inline constexpr double kDefaultTolerance = 1e-9;

/// Metric signature (p, q) of a non-degenerate algebra: the first p basis
/// vectors square to +1, the next q to -1.
class Signature {
 public:
  Signature() = default;
  Signature(int positive, int negative);

  int positive() const { return positive_; }
  int negative() const { return negative_; }
  int dimension() const { return positive_ + negative_; }

  /// Square of basis vector e_index (1-based): +1 or -1.
  int metric(int index) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int positive_ = 1;
  int negative_ = 0;
};

/// A basis blade is a subset of the basis vectors, encoded as a bitmask:
/// bit i set means e_{i+1} participates. The empty mask is the scalar 1.
using BladeMask = std::uint32_t;

int grade(BladeMask mask);

/// Debug name of a basis blade: "1", "e2", "e13", ... Indices above 9 are
/// brace-wrapped ("e{3,12}") to stay unambiguous.
std::string blade_name(BladeMask mask);

/// Sparse multivector: a finite map from basis blades to coefficients.
/// Values are immutable; every operation returns a fresh multivector in
/// canonical form (terms sorted by mask, near-zero coefficients dropped).
class Multivector {
 public:
  using Term = std::pair<BladeMask, double>;

  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector scalar(const Signature& sig, double value);
  static Multivector basis_vector(const Signature& sig, int index);  // 1-based
  static Multivector basis_blade(const Signature& sig, BladeMask mask,
                                 double coefficient = 1.0);
  static Multivector vector(const Signature& sig,
                            std::span<const double> coords);
  static Multivector from_terms(const Signature& sig, std::vector<Term> terms);

  const Signature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }

  double coefficient(BladeMask mask) const;
  double scalar_part() const { return coefficient(0); }
  bool is_zero() const { return terms_.empty(); }

  /// True when every stored term has the same grade (vacuously true for the
  /// zero multivector, which reports grade 0).
  bool is_homogeneous(int* grade_out = nullptr) const;
  bool is_vector() const;

  /// Grade-1 coordinates on e_1..e_d. Throws std::invalid_argument if any
  /// stored term is not grade 1.
  std::vector<double> vector_coords() const;

  /// Euclidean 2-norm of the coefficient vector.
  double norm() const;

  Multivector operator-() const;
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(double c, const Multivector& a);
  friend Multivector operator*(const Multivector& a, double c) { return c * a; }

  /// Signed-sum rendering, terms ordered by grade then mask: "1.5 e12 - 2 e3".
  std::string to_string() const;

 private:
  Signature sig_;
  std::vector<Term> terms_;
};

/// The associative Clifford product. On basis vectors: e_i e_i = metric(i),
/// e_i e_j = -e_j e_i for i != j.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Exterior (wedge) product: the geometric product restricted to terms with
/// no shared basis vectors.
Multivector outer_product(const Multivector& a, const Multivector& b);

/// Inner product, realized as the left contraction: on a grade-j term
/// against a grade-k term the result has grade k - j and vanishes for j > k.
/// On two vectors it is the symmetric metric dot product. This is the
/// weakest product for which dual(c ^ B) == inner_product(c, dual(B)) holds
/// for a vector c and blade B, which the OPNS/IPNS duality relies on.
Multivector inner_product(const Multivector& a, const Multivector& b);

/// Wedge of k grade-1 vectors; the zero multivector exactly when they are
/// linearly dependent. Requires k <= dimension and grade-1 inputs.
Multivector wedge_all(std::span<const Multivector> vectors);

/// Unit pseudoscalar I = e_1 ^ ... ^ e_d and its inverse under the geometric
/// product; the sign of I^{-1} is computed from I*I, not assumed.
Multivector pseudoscalar(const Signature& sig);
Multivector inverse_pseudoscalar(const Signature& sig);

/// Clifford dual A* = A I^{-1} (geometric product). undual multiplies by I
/// and is the exact inverse: undual(dual(a)) == a.
Multivector dual(const Multivector& a);
Multivector undual(const Multivector& a);

/// True when ||x ^ blade|| <= tol * ||x|| * ||blade||: x lies in the outer
/// product null space of the blade. Throws on a zero blade or non-vector x.
bool opns_contains(const Multivector& blade, const Multivector& x,
                   double tol = kDefaultTolerance);

/// True when ||x . blade|| <= tol * ||x|| * ||blade|| with the left
/// contraction: x lies in the inner product null space of the blade.
bool ipns_contains(const Multivector& blade, const Multivector& x,
                   double tol = kDefaultTolerance);

}  // namespace hyperconic
