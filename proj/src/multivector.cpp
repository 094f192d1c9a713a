#include "hyperconic/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace hyperconic {
namespace {

/// Sign from reordering the concatenation of two ascending blade masks into
/// ascending order: one transposition per (a-bit above b-bit) pair.
int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

enum class ProductKind { kGeometric, kOuter, kContraction };

Multivector blade_product(const Multivector& a, const Multivector& b,
                          ProductKind kind) {
  if (!(a.signature() == b.signature())) {
    throw std::invalid_argument("multivector signature mismatch");
  }
  const Signature& sig = a.signature();
  std::map<BladeMask, double> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (kind == ProductKind::kOuter && (ma & mb) != 0) continue;
      if (kind == ProductKind::kContraction && (ma & ~mb) != 0) continue;
      double factor = reorder_sign(ma, mb) * ca * cb;
      BladeMask common = ma & mb;
      while (common != 0) {
        int i = std::countr_zero(common);
        factor *= sig.metric(i + 1);
        common &= common - 1;
      }
      acc[ma ^ mb] += factor;
    }
  }
  std::vector<Multivector::Term> terms(acc.begin(), acc.end());
  return Multivector::from_terms(sig, std::move(terms));
}

}  // namespace

Signature::Signature(int positive, int negative)
    : positive_(positive), negative_(negative) {
  if (positive < 0 || negative < 0 || positive + negative < 1 ||
      positive + negative > kMaxDimension) {
    throw std::invalid_argument("signature (p, q) requires p, q >= 0 and 1 <= p + q <= " +
                                std::to_string(kMaxDimension));
  }
}

int Signature::metric(int index) const {
  if (index < 1 || index > dimension()) {
    throw std::invalid_argument("basis index out of range");
  }
  return index <= positive_ ? 1 : -1;
}

int grade(BladeMask mask) { return std::popcount(mask); }

std::string blade_name(BladeMask mask) {
  if (mask == 0) return "1";
  bool wide = false;
  for (BladeMask m = mask; m != 0; m &= m - 1) {
    if (std::countr_zero(m) >= 9) wide = true;
  }
  std::string name = wide ? "e{" : "e";
  bool first = true;
  for (BladeMask m = mask; m != 0; m &= m - 1) {
    if (!first && wide) name += ',';
    name += std::to_string(std::countr_zero(m) + 1);
    first = false;
  }
  if (wide) name += '}';
  return name;
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  return from_terms(sig, {{BladeMask{0}, value}});
}

Multivector Multivector::basis_vector(const Signature& sig, int index) {
  if (index < 1 || index > sig.dimension()) {
    throw std::invalid_argument("basis index out of range");
  }
  return from_terms(sig, {{BladeMask{1} << (index - 1), 1.0}});
}

Multivector Multivector::basis_blade(const Signature& sig, BladeMask mask,
                                     double coefficient) {
  if (mask >= (BladeMask{1} << sig.dimension())) {
    throw std::invalid_argument("blade mask outside the algebra dimension");
  }
  return from_terms(sig, {{mask, coefficient}});
}

Multivector Multivector::vector(const Signature& sig,
                                std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != sig.dimension()) {
    throw std::invalid_argument("coordinate count must equal the dimension");
  }
  std::vector<Term> terms;
  terms.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    terms.push_back({BladeMask{1} << i, coords[i]});
  }
  return from_terms(sig, std::move(terms));
}

Multivector Multivector::from_terms(const Signature& sig,
                                    std::vector<Term> terms) {
  const BladeMask limit = BladeMask{1} << sig.dimension();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Multivector out(sig);
  for (const auto& [mask, coeff] : terms) {
    if (mask >= limit) {
      throw std::invalid_argument("blade mask outside the algebra dimension");
    }
    if (!out.terms_.empty() && out.terms_.back().first == mask) {
      out.terms_.back().second += coeff;
    } else {
      out.terms_.push_back({mask, coeff});
    }
  }
  std::erase_if(out.terms_, [](const Term& t) {
    return std::abs(t.second) <= kCoefficientEpsilon;
  });
  return out;
}

double Multivector::coefficient(BladeMask mask) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mask,
      [](const Term& t, BladeMask m) { return t.first < m; });
  return (it != terms_.end() && it->first == mask) ? it->second : 0.0;
}

bool Multivector::is_homogeneous(int* grade_out) const {
  int g = terms_.empty() ? 0 : grade(terms_.front().first);
  for (const auto& [mask, coeff] : terms_) {
    if (grade(mask) != g) return false;
  }
  if (grade_out != nullptr) *grade_out = g;
  return true;
}

bool Multivector::is_vector() const {
  int g = 0;
  return is_homogeneous(&g) && (g == 1 || terms_.empty());
}

std::vector<double> Multivector::vector_coords() const {
  if (!is_vector()) {
    throw std::invalid_argument("multivector is not grade 1");
  }
  std::vector<double> coords(sig_.dimension(), 0.0);
  for (const auto& [mask, coeff] : terms_) {
    coords[std::countr_zero(mask)] = coeff;
  }
  return coords;
}

double Multivector::norm() const {
  double sum = 0.0;
  for (const auto& [mask, coeff] : terms_) sum += coeff * coeff;
  return std::sqrt(sum);
}

Multivector Multivector::operator-() const { return -1.0 * *this; }

Multivector operator+(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) {
    throw std::invalid_argument("multivector signature mismatch");
  }
  std::vector<Multivector::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Multivector::from_terms(a.signature(), std::move(terms));
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  return a + (-1.0 * b);
}

Multivector operator*(double c, const Multivector& a) {
  std::vector<Multivector::Term> terms = a.terms_;
  for (auto& [mask, coeff] : terms) coeff *= c;
  return Multivector::from_terms(a.signature(), std::move(terms));
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Term> ordered = terms_;
  std::sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
    int ga = grade(a.first), gb = grade(b.first);
    return ga != gb ? ga < gb : a.first < b.first;
  });
  std::string out;
  for (const auto& [mask, coeff] : ordered) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", std::abs(coeff));
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    out += buf;
    if (mask != 0) {
      out += ' ';
      out += blade_name(mask);
    }
  }
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return blade_product(a, b, ProductKind::kGeometric);
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  return blade_product(a, b, ProductKind::kOuter);
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  return blade_product(a, b, ProductKind::kContraction);
}

Multivector wedge_all(std::span<const Multivector> vectors) {
  if (vectors.empty()) {
    throw std::invalid_argument("wedge_all requires at least one vector");
  }
  const Signature& sig = vectors.front().signature();
  if (static_cast<int>(vectors.size()) > sig.dimension()) {
    throw std::invalid_argument("cannot wedge more vectors than the dimension");
  }
  for (const Multivector& v : vectors) {
    if (!v.is_vector()) {
      throw std::invalid_argument("wedge_all requires grade-1 inputs");
    }
  }
  Multivector out = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    out = outer_product(out, vectors[i]);
  }
  return out;
}

Multivector pseudoscalar(const Signature& sig) {
  return Multivector::basis_blade(
      sig, (BladeMask{1} << sig.dimension()) - 1, 1.0);
}

Multivector inverse_pseudoscalar(const Signature& sig) {
  Multivector unit = pseudoscalar(sig);
  double square = geometric_product(unit, unit).scalar_part();
  // I*I is +1 or -1 in a non-degenerate algebra; divide rather than assume.
  return (1.0 / square) * unit;
}

Multivector dual(const Multivector& a) {
  return geometric_product(a, inverse_pseudoscalar(a.signature()));
}

Multivector undual(const Multivector& a) {
  return geometric_product(a, pseudoscalar(a.signature()));
}

namespace {

bool nullspace_contains(const Multivector& blade, const Multivector& x,
                        double tol, ProductKind kind) {
  if (blade.is_zero()) {
    throw std::invalid_argument("membership test against a zero blade");
  }
  if (!blade.is_homogeneous()) {
    throw std::invalid_argument("membership test requires a homogeneous blade");
  }
  if (!x.is_vector()) {
    throw std::invalid_argument("membership test requires a grade-1 point");
  }
  Multivector image = blade_product(x, blade, kind);
  return image.norm() <= tol * x.norm() * blade.norm();
}

}  // namespace

bool opns_contains(const Multivector& blade, const Multivector& x, double tol) {
  return nullspace_contains(blade, x, tol, ProductKind::kOuter);
}

bool ipns_contains(const Multivector& blade, const Multivector& x, double tol) {
  return nullspace_contains(blade, x, tol, ProductKind::kContraction);
}

}  // namespace hyperconic
