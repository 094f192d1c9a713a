#pragma once

#include <stdexcept>
#include <string>

namespace hyperconic {

/// A configuration that carries no answer: dependent wedge factors, a
/// vanishing sphere normalizer, a singular quadratic part.
struct degeneracy_error : std::runtime_error {
  explicit degeneracy_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// The data pins no unique solution (rank too low; many conics fit).
struct ambiguity_error : std::runtime_error {
  explicit ambiguity_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Training produced a non-finite loss or weights.
struct divergence_error : std::runtime_error {
  divergence_error(const std::string& what, int epoch_)
      : std::runtime_error(what), epoch(epoch_) {}
  int epoch = 0;
};

/// Rejection sampling ran out of attempts before filling both classes.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperconic
