#include "hyperconic/perceptron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperconic/conformal.hpp"
#include "hyperconic/io.hpp"

namespace hyperconic {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double uniform01(std::mt19937_64& rng) {
  // 53 uniform bits; identical across platforms, unlike the distributions.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void fisher_yates(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
}

int expected_weight_count(PerceptronFlavor flavor, int m) {
  return flavor == PerceptronFlavor::kElliptical ? (m + 1) * (m + 2) / 2
                                                 : m + 2;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void validate_dataset(const LabeledDataset& data) {
  if (data.points.empty()) {
    throw std::invalid_argument("empty dataset");
  }
  if (data.points.size() != data.labels.size()) {
    throw std::invalid_argument("points and labels differ in length");
  }
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    if (static_cast<int>(data.points[i].size()) != data.dimension) {
      throw std::invalid_argument("dataset points have mixed dimensions");
    }
    for (double c : data.points[i]) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("dataset contains non-finite coordinates");
      }
    }
    if (data.labels[i] == 1) {
      has_pos = true;
    } else if (data.labels[i] == -1) {
      has_neg = true;
    } else {
      throw std::invalid_argument("labels must be -1 or +1");
    }
  }
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("both classes must be present");
  }
}

}  // namespace

const char* to_string(TransferKind kind) {
  return kind == TransferKind::kBipolarSigmoid ? "bipolar-sigmoid"
                                               : "bipolar-sine";
}

TransferKind transfer_kind_from_string(const std::string& name) {
  if (name == "bipolar-sigmoid" || name == "sigmoid") {
    return TransferKind::kBipolarSigmoid;
  }
  if (name == "bipolar-sine" || name == "sine") {
    return TransferKind::kBipolarSine;
  }
  throw std::invalid_argument("unknown transfer function: " + name);
}

const char* to_string(PerceptronFlavor flavor) {
  return flavor == PerceptronFlavor::kElliptical ? "elliptical" : "spherical";
}

PerceptronFlavor flavor_from_string(const std::string& name) {
  if (name == "elliptical") return PerceptronFlavor::kElliptical;
  if (name == "spherical") return PerceptronFlavor::kSpherical;
  throw std::invalid_argument("unknown perceptron flavor: " + name);
}

double TransferFunction::value(double z) const {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("transfer steepness must be positive");
  }
  double s = beta * z;
  switch (kind) {
    case TransferKind::kBipolarSigmoid:
      return std::tanh(0.5 * s);
    case TransferKind::kBipolarSine:
      if (s >= kHalfPi) return 1.0;
      if (s <= -kHalfPi) return -1.0;
      return std::sin(s);
  }
  return 0.0;
}

double TransferFunction::derivative(double z) const {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("transfer steepness must be positive");
  }
  double s = beta * z;
  switch (kind) {
    case TransferKind::kBipolarSigmoid: {
      double f = std::tanh(0.5 * s);
      return 0.5 * beta * (1.0 - f * f);
    }
    case TransferKind::kBipolarSine:
      return std::abs(s) >= kHalfPi ? 0.0 : beta * std::cos(s);
  }
  return 0.0;
}

std::vector<double> feature_vector(PerceptronFlavor flavor,
                                   std::span<const double> x) {
  if (flavor == PerceptronFlavor::kElliptical) {
    return embed_point(x).coords.coords();
  }
  std::vector<double> features(x.begin(), x.end());
  double sq = 0.0;
  for (double c : x) sq += c * c;
  features.push_back(0.5 * sq);
  features.push_back(1.0);
  return features;
}

double forward(const PerceptronModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.input_dimension) {
    throw std::invalid_argument("input dimension mismatch");
  }
  std::vector<double> features = feature_vector(model.flavor, x);
  if (features.size() != model.weights.size()) {
    throw std::invalid_argument("weight count does not match the feature count");
  }
  return model.transfer.value(dot(model.weights, features));
}

std::pair<PerceptronModel, TrainReport> train(const LabeledDataset& data,
                                              const TrainConfig& config,
                                              PerceptronFlavor flavor) {
  validate_dataset(data);
  if (!(config.learning_rate > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (config.max_epochs < 1) {
    throw std::invalid_argument("max_epochs must be at least 1");
  }

  const std::size_t count = data.size();
  const int weight_count = expected_weight_count(flavor, data.dimension);

  std::vector<std::vector<double>> features;
  features.reserve(count);
  for (const auto& p : data.points) {
    features.push_back(feature_vector(flavor, p));
  }

  PerceptronModel model;
  model.flavor = flavor;
  model.input_dimension = data.dimension;
  model.transfer = config.transfer;
  model.weights.resize(weight_count);

  std::mt19937_64 rng(config.seed);
  for (double& w : model.weights) w = uniform01(rng) - 0.5;

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;

  TrainReport report;
  const TransferFunction& f = model.transfer;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    fisher_yates(order, rng);
    for (std::size_t i : order) {
      const std::vector<double>& phi = features[i];
      double z = dot(model.weights, phi);
      double err = f.value(z) - data.labels[i];
      double g = 2.0 * err * f.derivative(z);
      double step = config.learning_rate * g;
      for (int k = 0; k < weight_count; ++k) {
        model.weights[k] -= step * phi[k];
      }
    }

    double loss = 0.0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < count; ++i) {
      double y = f.value(dot(model.weights, features[i]));
      double err = y - data.labels[i];
      loss += err * err;
      if ((y > 0.0 && data.labels[i] == 1) || (y < 0.0 && data.labels[i] == -1)) {
        ++correct;
      }
    }
    loss /= static_cast<double>(count);
    report.loss_curve.push_back(loss);
    report.epochs = epoch;
    report.accuracy = static_cast<double>(correct) / static_cast<double>(count);

    bool finite = std::isfinite(loss);
    for (double w : model.weights) finite = finite && std::isfinite(w);
    if (!finite) {
      throw divergence_error(
          "training diverged (non-finite loss) at epoch " +
              std::to_string(epoch) + "; lower the learning rate",
          epoch);
    }
    if (report.accuracy >= config.target_accuracy) break;
  }
  return {std::move(model), std::move(report)};
}

std::pair<SymmetricMatrix, StandardForm> extract_conic(
    const PerceptronModel& model) {
  if (model.flavor != PerceptronFlavor::kElliptical) {
    throw std::invalid_argument("conic extraction needs an elliptical model");
  }
  SymmetricMatrix matrix = tau_inv(ConicVector(model.weights));
  StandardForm form;
  if (model.input_dimension == 2) {
    form = classify_conic(matrix);
  }
  return {std::move(matrix), form};
}

Multivector weights_to_sphere_vector(const PerceptronModel& model) {
  if (model.flavor != PerceptronFlavor::kSpherical) {
    throw std::invalid_argument("sphere vector needs a spherical model");
  }
  int m = model.input_dimension;
  if (static_cast<int>(model.weights.size()) != m + 2) {
    throw std::invalid_argument("weight count does not match the feature count");
  }
  // w . (x, |x|^2/2, 1) == S . X with S below; the inner product flips and
  // swaps the two null slots.
  Signature sig = conformal_signature(m);
  Multivector s(sig);
  for (int i = 0; i < m; ++i) {
    s = s + model.weights[i] * Multivector::basis_vector(sig, i + 1);
  }
  s = s + (-model.weights[m + 1]) * e_infinity(m);
  s = s + (-model.weights[m]) * e_origin(m);
  return s;
}

double spherical_decision(const PerceptronModel& model,
                          std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.input_dimension) {
    throw std::invalid_argument("input dimension mismatch");
  }
  return sphere_side(weights_to_sphere_vector(model), x);
}

void write_model(const std::filesystem::path& path,
                 const PerceptronModel& model) {
  std::ostringstream out;
  out << to_string(model.flavor) << '\n'
      << model.input_dimension << '\n'
      << to_string(model.transfer.kind) << '\n'
      << io::format_full(model.transfer.beta) << '\n'
      << io::join_csv(model.weights) << '\n';
  io::write_text_file_atomic(path, out.str());
}

PerceptronModel read_model(const std::filesystem::path& path) {
  std::istringstream in(io::read_text_file(path));
  std::string flavor_line, m_line, kind_line, beta_line, weights_line;
  if (!std::getline(in, flavor_line) || !std::getline(in, m_line) ||
      !std::getline(in, kind_line) || !std::getline(in, beta_line) ||
      !std::getline(in, weights_line)) {
    throw std::invalid_argument("model file is truncated: " + path.string());
  }
  PerceptronModel model;
  model.flavor = flavor_from_string(flavor_line);
  model.input_dimension = std::stoi(m_line);
  model.transfer.kind = transfer_kind_from_string(kind_line);
  model.transfer.beta = io::split_csv(beta_line).at(0);
  model.weights = io::split_csv(weights_line);
  if (static_cast<int>(model.weights.size()) !=
      expected_weight_count(model.flavor, model.input_dimension)) {
    throw std::invalid_argument("model weight count does not match its flavor");
  }
  return model;
}

}  // namespace hyperconic
