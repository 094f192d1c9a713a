#pragma once

#include <filesystem>
#include <string>

#include "hyperconic/dataset.hpp"

namespace hyperconic {

/// Static plot: class points as crosses (+1) and diamonds (-1), the conic
/// zero set traced by marching squares over the incidence sign.
struct PlotSpec {
  int width = 640;
  int height = 640;
  bool draw_classes = true;
  bool draw_conic = true;
  int grid_samples = 400;  // per axis
  Box bounds;              // world window; must be 2-dimensional
};

/// Deterministic SVG 1.1 markup; either input may be null when the matching
/// draw flag is off.
std::string render_plot(const LabeledDataset* data, const SymmetricMatrix* conic,
                        const PlotSpec& spec);

void write_plot(const std::filesystem::path& path, const LabeledDataset* data,
                const SymmetricMatrix* conic, const PlotSpec& spec);

/// Window covering the dataset (padded), or the fallback when empty.
Box plot_bounds(const LabeledDataset& data);

}  // namespace hyperconic
