#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperconic/conic_space.hpp"
#include "hyperconic/errors.hpp"
#include "hyperconic/fit.hpp"
#include "hyperconic/multivector.hpp"

namespace hyperconic {

enum class TransferKind { kBipolarSigmoid, kBipolarSine };

const char* to_string(TransferKind kind);
TransferKind transfer_kind_from_string(const std::string& name);

/// Odd, bounded activation with range [-1, +1].
///  - bipolar sigmoid: 2 / (1 + exp(-beta z)) - 1 == tanh(beta z / 2)
///  - bipolar sine: sin(beta z) for |beta z| <= pi/2, sign(z) beyond,
///    with derivative 0 in the saturated region.
struct TransferFunction {
  TransferKind kind = TransferKind::kBipolarSigmoid;
  double beta = 1.0;

  double value(double z) const;
  double derivative(double z) const;
};

enum class PerceptronFlavor { kElliptical, kSpherical };

const char* to_string(PerceptronFlavor flavor);
PerceptronFlavor flavor_from_string(const std::string& name);

/// Single neuron over lifted features. Elliptical models read the
/// (m+1)(m+2)/2 embedded coordinates (the 1/sqrt2 constant slot plays the
/// bias); spherical models read the m + 2 conformal coordinates
/// (x, |x|^2/2, 1).
struct PerceptronModel {
  PerceptronFlavor flavor = PerceptronFlavor::kElliptical;
  int input_dimension = 2;  // m
  TransferFunction transfer;
  std::vector<double> weights;
};

struct LabeledDataset {
  int dimension = 0;
  std::vector<std::vector<double>> points;
  std::vector<int> labels;  // -1 or +1
  std::string metadata;

  std::size_t size() const { return points.size(); }
};

struct TrainConfig {
  double learning_rate = 0.05;
  int max_epochs = 1000;
  double target_accuracy = 1.0;
  std::uint64_t seed = 1;
  TransferFunction transfer;
};

struct TrainReport {
  int epochs = 0;
  double accuracy = 0.0;
  std::vector<double> loss_curve;  // mean squared error per epoch
};

std::vector<double> feature_vector(PerceptronFlavor flavor,
                                   std::span<const double> x);

/// f(w . features(x)); result lies in [-1, 1].
double forward(const PerceptronModel& model, std::span<const double> x);

/// Sequential delta-rule descent on the squared error (f(w.x) - label)^2
/// with seeded per-epoch shuffling. Stops at the first epoch reaching the
/// target accuracy, else after max_epochs. Throws divergence_error when the
/// loss or the weights stop being finite.
std::pair<PerceptronModel, TrainReport> train(const LabeledDataset& data,
                                              const TrainConfig& config,
                                              PerceptronFlavor flavor);

/// tau_inv of the weights plus the standard form (classification only for
/// m = 2; other dimensions report kUnclassified). Elliptical models only.
std::pair<SymmetricMatrix, StandardForm> extract_conic(
    const PerceptronModel& model);

/// Reads a spherical model's weights as a conformal sphere vector.
Multivector weights_to_sphere_vector(const PerceptronModel& model);

/// Normalized sphere-side value of a spherical model at x: positive inside,
/// negative outside. Throws degeneracy_error when the weight on the |x|^2
/// slot vanishes (flat decision boundary).
double spherical_decision(const PerceptronModel& model,
                          std::span<const double> x);

/// Text model format, one line per field: flavor, m, transfer kind, beta,
/// then the weights comma-separated at full precision.
void write_model(const std::filesystem::path& path,
                 const PerceptronModel& model);
PerceptronModel read_model(const std::filesystem::path& path);

}  // namespace hyperconic
