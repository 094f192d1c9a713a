// Test-only oracle: multivector products expanded term by term over basis
// blades kept as explicit generator index lists. Signs come from bubble
// sorting adjacent transpositions and metric contraction of equal
// neighbors, with no bit tricks shared with the library implementation.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hyperconic/multivector.hpp"

namespace naive {

using hyperconic::BladeMask;
using hyperconic::Multivector;
using hyperconic::Signature;

struct Expansion {
  int sign = 1;                // 0 when annihilated by the metric
  std::vector<int> generators; // strictly ascending 1-based indices
};

// Sort a generator word into canonical form, counting transpositions and
// contracting equal neighbors through the metric.
inline Expansion canonicalize(std::vector<int> word, const Signature& sig) {
  Expansion out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        out.sign = -out.sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        out.sign *= sig.metric(word[i]);
        word.erase(word.begin() + i, word.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  out.generators = std::move(word);
  return out;
}

inline std::vector<int> mask_to_word(BladeMask mask) {
  std::vector<int> word;
  for (int i = 0; i < 32; ++i) {
    if (mask & (BladeMask{1} << i)) word.push_back(i + 1);
  }
  return word;
}

inline BladeMask word_to_mask(const std::vector<int>& word) {
  BladeMask mask = 0;
  for (int g : word) mask |= BladeMask{1} << (g - 1);
  return mask;
}

enum class Product { geometric, outer, contraction };

inline Multivector product(const Multivector& a, const Multivector& b,
                           Product kind) {
  const Signature& sig = a.signature();
  std::map<BladeMask, double> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> word = mask_to_word(ma);
      std::vector<int> wb = mask_to_word(mb);
      const std::size_t ga = word.size(), gb = wb.size();
      word.insert(word.end(), wb.begin(), wb.end());
      Expansion e = canonicalize(std::move(word), sig);
      if (kind == Product::outer && e.generators.size() != ga + gb) continue;
      if (kind == Product::contraction &&
          (gb < ga || e.generators.size() != gb - ga)) {
        continue;
      }
      acc[word_to_mask(e.generators)] += e.sign * ca * cb;
    }
  }
  std::vector<Multivector::Term> terms(acc.begin(), acc.end());
  return Multivector::from_terms(sig, std::move(terms));
}

inline Multivector geometric(const Multivector& a, const Multivector& b) {
  return product(a, b, Product::geometric);
}
inline Multivector outer(const Multivector& a, const Multivector& b) {
  return product(a, b, Product::outer);
}
inline Multivector contraction(const Multivector& a, const Multivector& b) {
  return product(a, b, Product::contraction);
}

// Random sparse multivector: up to max_terms random blades, coefficients in
// [-1, 1].
inline Multivector random_multivector(const Signature& sig,
                                      std::mt19937_64& rng,
                                      int max_terms = 8) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<BladeMask> mask_dist(
      0, (BladeMask{1} << sig.dimension()) - 1);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<Multivector::Term> terms;
  int n = term_count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({mask_dist(rng), coeff(rng)});
  return Multivector::from_terms(sig, std::move(terms));
}

inline Multivector random_vector(const Signature& sig, std::mt19937_64& rng,
                                 double radius = 1.0) {
  std::uniform_real_distribution<double> coeff(-radius, radius);
  std::vector<double> coords(sig.dimension());
  for (double& c : coords) c = coeff(rng);
  return Multivector::vector(sig, coords);
}

// Coefficient-wise comparison: |a - b| <= tol * max(1, |a|, |b|) per blade.
inline bool coefficients_close(const Multivector& a, const Multivector& b,
                               double tol) {
  std::map<BladeMask, double> merged;
  for (const auto& [mask, coeff] : a.terms()) merged[mask] = coeff;
  for (const auto& [mask, coeff] : b.terms()) merged.try_emplace(mask, 0.0);
  for (const auto& [mask, unused] : merged) {
    double ca = a.coefficient(mask), cb = b.coefficient(mask);
    double gauge = std::max({1.0, std::abs(ca), std::abs(cb)});
    if (std::abs(ca - cb) > tol * gauge) return false;
  }
  return true;
}

}  // namespace naive
