#include "hyperconic/conic_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperconic/io.hpp"

namespace hyperconic {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int triangular_side(int length) {
  int n = static_cast<int>(std::round((std::sqrt(8.0 * length + 1.0) - 1.0) / 2.0));
  if (n < 1 || n * (n + 1) / 2 != length) {
    throw std::invalid_argument("coordinate length is not a triangular number");
  }
  return n;
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("symmetric matrix needs size >= 2");
  }
  upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) a.set(i, i, 1.0);
  return a;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> entries) {
  SymmetricMatrix a(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    a.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
  }
  return a;
}

int SymmetricMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("matrix index out of range");
  }
  if (i > j) std::swap(i, j);
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

double SymmetricMatrix::at(int i, int j) const { return upper_[index(i, j)]; }

void SymmetricMatrix::set(int i, int j, double value) {
  upper_[index(i, j)] = value;
}

double SymmetricMatrix::quadratic_form(std::span<const double> x_prime) const {
  if (static_cast<int>(x_prime.size()) != n_) {
    throw std::invalid_argument("quadratic form size mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) {
    sum += at(i, i) * x_prime[i] * x_prime[i];
    for (int j = i + 1; j < n_; ++j) {
      sum += 2.0 * at(i, j) * x_prime[i] * x_prime[j];
    }
  }
  return sum;
}

double SymmetricMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      double v = at(i, j);
      sum += v * v;
    }
  }
  return std::sqrt(sum);
}

double SymmetricMatrix::det() const {
  // Gaussian elimination with partial pivoting on a dense copy.
  std::vector<double> a(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) a[i * n_ + j] = at(i, j);
  }
  double det = 1.0;
  for (int c = 0; c < n_; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n_; ++r) {
      if (std::abs(a[r * n_ + c]) > std::abs(a[pivot * n_ + c])) pivot = r;
    }
    if (a[pivot * n_ + c] == 0.0) return 0.0;
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) std::swap(a[c * n_ + j], a[pivot * n_ + j]);
      det = -det;
    }
    det *= a[c * n_ + c];
    for (int r = c + 1; r < n_; ++r) {
      double f = a[r * n_ + c] / a[c * n_ + c];
      for (int j = c; j < n_; ++j) a[r * n_ + j] -= f * a[c * n_ + j];
    }
  }
  return det;
}

double SymmetricMatrix::trace() const {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) sum += at(i, i);
  return sum;
}

SymmetricMatrix SymmetricMatrix::scaled(double c) const {
  SymmetricMatrix out = *this;
  for (double& v : out.upper_) v *= c;
  return out;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  SymmetricMatrix out = a;
  for (std::size_t i = 0; i < out.upper_.size(); ++i) out.upper_[i] += b.upper_[i];
  return out;
}

std::string SymmetricMatrix::to_csv_line() const {
  return io::join_csv(upper_);
}

SymmetricMatrix SymmetricMatrix::from_csv_line(const std::string& line) {
  std::vector<double> values = io::split_csv(line);
  int n = triangular_side(static_cast<int>(values.size()));
  SymmetricMatrix a(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) a.set(i, j, values[k++]);
  }
  return a;
}

ConicVector::ConicVector(std::vector<double> coords)
    : coords_(std::move(coords)) {
  n_ = triangular_side(static_cast<int>(coords_.size()));
}

double ConicVector::norm() const {
  double sum = 0.0;
  for (double c : coords_) sum += c * c;
  return std::sqrt(sum);
}

ConicVector ConicVector::normalized() const {
  double scale = norm();
  if (scale == 0.0) {
    throw std::invalid_argument("cannot normalize a zero conic vector");
  }
  // Deterministic representative: largest-magnitude coordinate positive.
  double lead = 0.0;
  for (double c : coords_) {
    if (std::abs(c) > std::abs(lead)) lead = c;
  }
  if (lead < 0.0) scale = -scale;
  std::vector<double> out = coords_;
  for (double& c : out) c /= scale;
  return ConicVector(std::move(out));
}

double ConicVector::dot(const ConicVector& other) const {
  if (dimension() != other.dimension()) {
    throw std::invalid_argument("conic vector dimension mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < dimension(); ++i) sum += coords_[i] * other.coords_[i];
  return sum;
}

Multivector ConicVector::to_multivector() const {
  return Multivector::vector(Signature(dimension(), 0), coords_);
}

std::string ConicVector::to_csv_line() const { return io::join_csv(coords_); }

ConicVector ConicVector::from_csv_line(const std::string& line) {
  return ConicVector(io::split_csv(line));
}

std::vector<std::pair<int, int>> monomial_order(int n) {
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i + 1 < n; ++i) order.push_back({i, n - 1});
  order.push_back({n - 1, n - 1});
  for (int c = 0; c + 1 < n; ++c) {
    order.push_back({c, c});
    for (int r = c - 1; r >= 0; --r) order.push_back({r, c});
  }
  return order;
}

ConicVector tau(const SymmetricMatrix& a) {
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(a.size()) * (a.size() + 1) / 2);
  for (const auto& [i, j] : monomial_order(a.size())) {
    coords.push_back(i == j ? a.at(i, j) / kSqrt2 : a.at(i, j));
  }
  return ConicVector(std::move(coords));
}

SymmetricMatrix tau_inv(const ConicVector& v) {
  SymmetricMatrix a(v.matrix_size());
  int t = 0;
  for (const auto& [i, j] : monomial_order(v.matrix_size())) {
    a.set(i, j, i == j ? v[t] * kSqrt2 : v[t]);
    ++t;
  }
  return a;
}

SymmetricMatrix iota(std::span<const double> x) {
  int n = static_cast<int>(x.size()) + 1;
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) {
    double xi = i + 1 < n ? x[i] : 1.0;
    for (int j = i; j < n; ++j) {
      double xj = j + 1 < n ? x[j] : 1.0;
      a.set(i, j, xi * xj);
    }
  }
  return a;
}

EmbeddedPoint embed_point(std::span<const double> x) {
  return EmbeddedPoint{std::vector<double>(x.begin(), x.end()),
                       tau(iota(x))};
}

double incidence(std::span<const double> x, const SymmetricMatrix& a) {
  if (a.size() != static_cast<int>(x.size()) + 1) {
    throw std::invalid_argument("incidence size mismatch");
  }
  return embed_point(x).coords.dot(tau(a));
}

std::vector<double> veronese(std::span<const double> x_homogeneous, int m) {
  if (static_cast<int>(x_homogeneous.size()) != m + 1) {
    throw std::invalid_argument("homogeneous point must have length m + 1");
  }
  if (std::abs(x_homogeneous[m] - 1.0) > 1e-12) {
    throw std::invalid_argument("point not in the affine chart");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m + 1) * (m + 2) / 2);
  for (const auto& [i, j] : monomial_order(m + 1)) {
    out.push_back(x_homogeneous[i] * x_homogeneous[j]);
  }
  return out;
}

IndexSet index_set(int m) {
  if (m < 1) {
    throw std::invalid_argument("index set requires m >= 1");
  }
  IndexSet s{m, {}};
  s.positions.reserve(m + 1);
  s.positions.push_back(m + 1);
  if (m >= 1) s.positions.push_back(m + 2);
  for (int l = 2; l <= m; ++l) {
    s.positions.push_back(s.positions.back() + l - 1);
  }
  return s;
}

std::vector<double> chart_T(std::span<const double> v, const IndexSet& s) {
  std::vector<double> out(v.begin(), v.end());
  for (int pos : s.positions) {
    if (pos < 1 || pos > static_cast<int>(out.size())) {
      throw std::invalid_argument("index set position out of range");
    }
    out[pos - 1] *= kSqrt2;
  }
  return out;
}

std::vector<double> chart_p(std::span<const double> v) {
  bool nonzero = false;
  for (double c : v) {
    if (c != 0.0) nonzero = true;
  }
  if (!nonzero) {
    throw std::invalid_argument("projective point requires a nonzero vector");
  }
  return std::vector<double>(v.begin(), v.end());
}

std::vector<double> chart_q(std::span<const double> z) {
  if (z.empty() || std::abs(z.back() - 1.0) > 1e-12) {
    throw std::invalid_argument("point not in the affine chart");
  }
  return std::vector<double>(z.begin(), z.end() - 1);
}

bool projective_equal(std::span<const double> u, std::span<const double> v,
                      double tol) {
  if (u.size() != v.size() || u.empty()) return false;
  std::size_t lead = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) > std::abs(u[lead])) lead = i;
  }
  if (u[lead] == 0.0 || v[lead] == 0.0) return false;
  double scale = u[lead] / v[lead];
  for (std::size_t i = 0; i < u.size(); ++i) {
    double scaled = v[i] * scale;
    if (std::abs(u[i] - scaled) >
        tol * std::max({1.0, std::abs(u[i]), std::abs(scaled)})) {
      return false;
    }
  }
  return true;
}

}  // namespace hyperconic
