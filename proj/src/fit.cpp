#include "hyperconic/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hyperconic/multivector.hpp"

namespace hyperconic {
namespace {

constexpr double kWedgeDegeneracyTol = 1e-10;
constexpr double kRankTol = 1e-12;
constexpr double kDegenerateDetTol = 1e-8;   // |det A| vs ||A||^3
constexpr double kParabolaDeltaTol = 1e-8;   // |delta| vs ||A||^2

int embedded_dimension(std::span<const std::vector<double>> points) {
  if (points.empty()) {
    throw std::invalid_argument("no points given");
  }
  std::size_t m = points.front().size();
  if (m < 1) {
    throw std::invalid_argument("points must have dimension >= 1");
  }
  for (const auto& p : points) {
    if (p.size() != m) {
      throw std::invalid_argument("points have mixed dimensions");
    }
  }
  return static_cast<int>((m + 1) * (m + 2) / 2);
}

std::vector<std::vector<double>> embed_rows(
    std::span<const std::vector<double>> points) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(embed_point(p).coords.coords());
  return rows;
}

/// Nullspace direction of a (D-1) x D row-rank-(D-1) system by partial
/// pivoting; the single non-pivot column carries the free variable.
std::vector<double> nullspace_exact(std::vector<std::vector<double>> rows) {
  const int d = static_cast<int>(rows.front().size());
  const int nrows = static_cast<int>(rows.size());
  double scale = 0.0;
  for (const auto& row : rows) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0.0) {
    throw ambiguity_error("all embedded coordinates vanish");
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < d && r < nrows; ++c) {
    int best = r;
    for (int i = r + 1; i < nrows; ++i) {
      if (std::abs(rows[i][c]) > std::abs(rows[best][c])) best = i;
    }
    if (std::abs(rows[best][c]) <= kRankTol * scale) continue;
    std::swap(rows[r], rows[best]);
    for (int i = r + 1; i < nrows; ++i) {
      double f = rows[i][c] / rows[r][c];
      for (int j = c; j < d; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) < d - 1) {
    throw ambiguity_error("rank too low: more than one conic fits the points");
  }
  // Free column: the one skipped during elimination.
  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = d - 1;
  for (int c = 0; c < d; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  std::vector<double> x(d, 0.0);
  x[free_col] = 1.0;
  for (int k = static_cast<int>(pivot_col.size()) - 1; k >= 0; --k) {
    int c = pivot_col[k];
    double sum = 0.0;
    for (int j = c + 1; j < d; ++j) sum += rows[k][j] * x[j];
    x[c] = -sum / rows[k][c];
  }
  return x;
}

std::vector<double> smallest_eigenvector(
    const std::vector<std::vector<double>>& rows) {
  const int d = static_cast<int>(rows.front().size());
  std::vector<std::vector<double>> gram(d, std::vector<double>(d, 0.0));
  for (const auto& row : rows) {
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) gram[i][j] += row[i] * row[j];
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) gram[i][j] = gram[j][i];
  }
  detail::EigenResult eig = detail::jacobi_eigen(gram);
  double top = std::abs(eig.values.back());
  if (d >= 2 && std::abs(eig.values[1]) <= kRankTol * std::max(top, 1.0)) {
    throw ambiguity_error("rank too low: more than one conic fits the points");
  }
  return eig.vectors.front();
}

ConicVector normalized_direction(std::vector<double> coords) {
  return ConicVector(std::move(coords)).normalized();
}

struct Eigen2 {
  double lambda_a = 0.0;  // along direction (cos t, sin t)
  double lambda_b = 0.0;  // along the orthogonal direction
  double angle = 0.0;
};

Eigen2 eigen2(double a, double b, double c) {
  // Symmetric [[a, b], [b, c]].
  if (b == 0.0) {
    return {a, c, 0.0};
  }
  double t = 0.5 * std::atan2(2.0 * b, a - c);
  double ct = std::cos(t), st = std::sin(t);
  double la = a * ct * ct + 2.0 * b * ct * st + c * st * st;
  double lb = a * st * st - 2.0 * b * ct * st + c * ct * ct;
  return {la, lb, t};
}

double fold_angle(double t) {
  const double half_pi = std::numbers::pi / 2.0;
  while (t > half_pi) t -= std::numbers::pi;
  while (t <= -half_pi) t += std::numbers::pi;
  return t;
}

std::string term(const char* var, double center, double denom) {
  char buf[96];
  if (std::abs(center) < 1e-9) {
    std::snprintf(buf, sizeof(buf), "%s^2/%.6g", var, denom);
  } else {
    std::snprintf(buf, sizeof(buf), "(%s%+.6g)^2/%.6g", var, -center, denom);
  }
  return buf;
}

}  // namespace

const char* to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::kEllipse: return "ellipse";
    case ConicKind::kHyperbola: return "hyperbola";
    case ConicKind::kParabola: return "parabola";
    case ConicKind::kDegenerate: return "degenerate";
    case ConicKind::kUnclassified: return "unclassified";
  }
  return "unknown";
}

std::string StandardForm::equation() const {
  char buf[256];
  // Axis-aligned conics print in x/y directly; the first axis may lie
  // along either coordinate direction. Anything else gets principal
  // coordinates plus the rotation.
  bool along_x = std::abs(rotation) <= 1e-9;
  bool along_y = std::abs(rotation - std::numbers::pi / 2.0) <= 1e-9;
  bool rotated = !along_x && !along_y;
  const char* u = rotated ? "u" : (along_x ? "x" : "y");
  const char* v = rotated ? "v" : (along_x ? "y" : "x");
  double cu = rotated ? 0.0 : (along_x ? center[0] : center[1]);
  double cv = rotated ? 0.0 : (along_x ? center[1] : center[0]);
  std::string body;
  switch (kind) {
    case ConicKind::kEllipse:
      body = term(u, cu, semi_axes[0] * semi_axes[0]) + " + " +
             term(v, cv, semi_axes[1] * semi_axes[1]) + " = 1";
      break;
    case ConicKind::kHyperbola:
      body = term(u, cu, semi_axes[0] * semi_axes[0]) + " - " +
             term(v, cv, semi_axes[1] * semi_axes[1]) + " = 1";
      break;
    case ConicKind::kParabola:
      std::snprintf(buf, sizeof(buf), "v^2 = %.6g u (vertex (%.6g, %.6g))",
                    4.0 * semi_axes[0], center[0], center[1]);
      return buf;
    case ConicKind::kDegenerate:
      return "degenerate conic (det ~ 0)";
    case ConicKind::kUnclassified:
      return "unclassified";
  }
  if (rotated) {
    std::snprintf(buf, sizeof(buf),
                  "%s  (principal axes at %.6g rad through (%.6g, %.6g))",
                  body.c_str(), rotation, center[0], center[1]);
    return buf;
  }
  return body;
}

ConicFitResult fit_exact(std::span<const std::vector<double>> points) {
  const int d = embedded_dimension(points);
  if (static_cast<int>(points.size()) != d - 1) {
    throw std::invalid_argument(
        "exact fit needs exactly " + std::to_string(d - 1) +
        " points for dimension " + std::to_string(points.front().size()));
  }
  Signature sig(d, 0);
  std::vector<Multivector> embedded;
  embedded.reserve(points.size());
  double norm_product = 1.0;
  for (const auto& p : points) {
    Multivector mv = embed_point(p).coords.to_multivector();
    norm_product *= mv.norm();
    embedded.push_back(std::move(mv));
  }
  Multivector blade = wedge_all(embedded);
  if (blade.norm() <= kWedgeDegeneracyTol * norm_product) {
    throw degeneracy_error(
        "degenerate configuration: embedded points are linearly dependent");
  }
  ConicVector conic = normalized_direction(dual(blade).vector_coords());
  std::vector<double> residuals;
  residuals.reserve(points.size());
  for (const auto& p : points) {
    residuals.push_back(embed_point(p).coords.dot(conic));
  }
  return ConicFitResult{conic, tau_inv(conic), std::move(residuals)};
}

ConicVector fit_oracle(std::span<const std::vector<double>> points) {
  const int d = embedded_dimension(points);
  if (static_cast<int>(points.size()) < d - 1) {
    throw ambiguity_error("underdetermined: need at least " +
                          std::to_string(d - 1) + " points");
  }
  std::vector<std::vector<double>> rows = embed_rows(points);
  if (static_cast<int>(points.size()) == d - 1) {
    return normalized_direction(nullspace_exact(std::move(rows)));
  }
  return normalized_direction(smallest_eigenvector(rows));
}

StandardForm classify_conic(const SymmetricMatrix& a_in) {
  if (a_in.size() != 3) {
    throw std::invalid_argument("classification is implemented for 3x3 matrices");
  }
  double scale = a_in.frobenius_norm();
  if (scale == 0.0) {
    throw degeneracy_error("zero matrix has no conic");
  }
  double quad_norm = std::sqrt(a_in.at(0, 0) * a_in.at(0, 0) +
                               2.0 * a_in.at(0, 1) * a_in.at(0, 1) +
                               a_in.at(1, 1) * a_in.at(1, 1));
  if (quad_norm <= 1e-12 * scale) {
    throw degeneracy_error("zero quadratic part: not a conic");
  }
  double delta = a_in.at(0, 0) * a_in.at(1, 1) - a_in.at(0, 1) * a_in.at(0, 1);
  double det3 = a_in.det();

  StandardForm form;
  if (std::abs(det3) <= kDegenerateDetTol * scale * scale * scale) {
    form.kind = ConicKind::kDegenerate;
    if (std::abs(delta) > kParabolaDeltaTol * scale * scale) {
      double cx = (-a_in.at(0, 2) * a_in.at(1, 1) + a_in.at(1, 2) * a_in.at(0, 1)) / delta;
      double cy = (-a_in.at(1, 2) * a_in.at(0, 0) + a_in.at(0, 2) * a_in.at(0, 1)) / delta;
      form.center = {cx, cy};
    }
    return form;
  }

  if (std::abs(delta) <= kParabolaDeltaTol * scale * scale) {
    // Parabola: rotate so the quadratic part becomes lambda * v^2.
    Eigen2 eig = eigen2(a_in.at(0, 0), a_in.at(0, 1), a_in.at(1, 1));
    double t, lambda;
    if (std::abs(eig.lambda_a) < std::abs(eig.lambda_b)) {
      t = eig.angle;           // u along the null direction
      lambda = eig.lambda_b;
    } else {
      t = eig.angle + std::numbers::pi / 2.0;
      lambda = eig.lambda_a;
    }
    double ct = std::cos(t), st = std::sin(t);
    double g = a_in.at(0, 2) * ct + a_in.at(1, 2) * st;
    double f = -a_in.at(0, 2) * st + a_in.at(1, 2) * ct;
    double c0 = a_in.at(2, 2);
    double u0 = -(c0 - f * f / lambda) / (2.0 * g);
    double v0 = -f / lambda;
    form.kind = ConicKind::kParabola;
    form.center = {u0 * ct - v0 * st, u0 * st + v0 * ct};
    double focal = std::abs(g / (2.0 * lambda));
    form.semi_axes = {focal, focal};
    form.rotation = fold_angle(t);
    return form;
  }

  // Central conic. Normalize so the leading-block determinant is +-1; the
  // outputs are scale-free either way, this keeps the arithmetic tame.
  SymmetricMatrix a = a_in.scaled(1.0 / std::sqrt(std::abs(delta)));
  delta = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(0, 1);
  double cx = (-a.at(0, 2) * a.at(1, 1) + a.at(1, 2) * a.at(0, 1)) / delta;
  double cy = (-a.at(1, 2) * a.at(0, 0) + a.at(0, 2) * a.at(0, 1)) / delta;
  form.center = {cx, cy};
  // Value at the center: b . c + a33.
  double k = a.at(0, 2) * cx + a.at(1, 2) * cy + a.at(2, 2);
  Eigen2 eig = eigen2(a.at(0, 0), a.at(0, 1), a.at(1, 1));

  struct Axis {
    double axis_sq;
    double angle;
  };
  Axis axis_a{-k / eig.lambda_a, fold_angle(eig.angle)};
  Axis axis_b{-k / eig.lambda_b,
              fold_angle(eig.angle + std::numbers::pi / 2.0)};

  if (delta > 0.0) {
    form.kind = ConicKind::kEllipse;
    // Imaginary ellipse (both axis_sq < 0): report the mirror locus.
    if (axis_a.axis_sq < 0.0 && axis_b.axis_sq < 0.0) {
      axis_a.axis_sq = -axis_a.axis_sq;
      axis_b.axis_sq = -axis_b.axis_sq;
    }
    Axis major = axis_a.axis_sq >= axis_b.axis_sq ? axis_a : axis_b;
    Axis minor = axis_a.axis_sq >= axis_b.axis_sq ? axis_b : axis_a;
    form.semi_axes = {std::sqrt(major.axis_sq), std::sqrt(minor.axis_sq)};
    form.rotation = std::abs(major.axis_sq - minor.axis_sq) <=
                            1e-12 * std::abs(major.axis_sq)
                        ? 0.0
                        : major.angle;
  } else {
    form.kind = ConicKind::kHyperbola;
    Axis transverse = axis_a.axis_sq > 0.0 ? axis_a : axis_b;
    Axis conjugate = axis_a.axis_sq > 0.0 ? axis_b : axis_a;
    form.semi_axes = {std::sqrt(transverse.axis_sq),
                      std::sqrt(-conjugate.axis_sq)};
    form.rotation = transverse.angle;
  }
  return form;
}

namespace detail {

EigenResult jacobi_eigen(const std::vector<std::vector<double>>& a_in) {
  const int n = static_cast<int>(a_in.size());
  std::vector<std::vector<double>> a = a_in;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off <= 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x][x] < a[y][y]; });
  EigenResult out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int k : order) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace detail

}  // namespace hyperconic
