#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hyperconic/conic_space.hpp"
#include "hyperconic/errors.hpp"
#include "hyperconic/perceptron.hpp"

namespace hyperconic {

/// Axis-aligned sampling window, one (lo, hi) pair per input dimension.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  int dimension() const { return static_cast<int>(lo.size()); }
};

/// Two-class sampler around a ground-truth hyperconic. Points are drawn
/// uniformly in the box and labeled by the sign of the incidence value
/// against the unit-normalized conic vector; points within the margin band
/// |incidence| < margin are discarded, as are surplus points of a class
/// that already reached its quota. Optional Gaussian jitter is applied to
/// the coordinates after labeling.
struct DatasetSpec {
  SymmetricMatrix conic = SymmetricMatrix::identity(3);
  int samples_per_class = 100;
  double margin = 0.05;
  Box box;
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;
};

/// Throws budget_error when 20000 * samples_per_class draws do not fill
/// both classes.
LabeledDataset generate_dataset(const DatasetSpec& spec);

/// CSV with header "x1,...,xm,label"; labels written as +1 / -1; full
/// precision, atomic write.
void write_dataset_csv(const std::filesystem::path& path,
                       const LabeledDataset& data);

/// Accepts the dataset format or a headerless/label-free point list; labels
/// default to 0 when absent.
LabeledDataset read_dataset_csv(const std::filesystem::path& path);

/// Points lying on a plane conic (m = 2): scanlines across the box solve
/// the one-variable quadratic; draws stop once count points are found.
/// Optional Gaussian jitter is added afterwards.
std::vector<std::vector<double>> sample_on_conic(const SymmetricMatrix& conic,
                                                 int count, const Box& box,
                                                 std::uint64_t seed,
                                                 double noise_sigma = 0.0);

/// Named ground-truth conics: circle, ellipse, shifted-ellipse, hyperbola,
/// parabola.
SymmetricMatrix preset_conic(const std::string& name);
Box preset_box(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace hyperconic
