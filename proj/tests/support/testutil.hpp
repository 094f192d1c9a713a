#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

/// Equal or adjacent representables: the strictest gauge available for a
/// value that passed through one non-power-of-two scaling each way.
inline bool within_one_ulp(double a, double b) {
  return a == b || std::nextafter(a, b) == b;
}

inline bool within_ulps(double a, double b, int n) {
  for (int i = 0; i <= n; ++i) {
    if (a == b) return true;
    a = std::nextafter(a, b);
  }
  return false;
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline std::vector<double> random_point(std::mt19937_64& rng, int m, double lo,
                                        double hi) {
  std::vector<double> x(m);
  for (double& c : x) c = uniform(rng, lo, hi);
  return x;
}

}  // namespace testutil
