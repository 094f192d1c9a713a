#include "hyperconic/dataset.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <stdexcept>

#include "hyperconic/fit.hpp"
#include "hyperconic/io.hpp"
#include "hyperconic/svg.hpp"
#include "support/testutil.hpp"

using namespace hyperconic;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() /
         (std::string("hyperconic_test_") + name);
}

}  // namespace

TEST_CASE("generation balances classes and honors the margin") {
  DatasetSpec spec;
  spec.conic = preset_conic("circle");
  spec.box = preset_box("circle");
  spec.samples_per_class = 100;
  spec.margin = 0.05;
  spec.seed = 31;
  LabeledDataset data = generate_dataset(spec);
  REQUIRE(data.size() == 200);

  SymmetricMatrix unit = tau_inv(tau(spec.conic).normalized());
  int positives = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double side = incidence(data.points[i], unit);
    CHECK(std::abs(side) >= spec.margin);
    CHECK(data.labels[i] == (side > 0.0 ? 1 : -1));
    if (data.labels[i] == 1) ++positives;
  }
  CHECK(positives == 100);

  LabeledDataset same = generate_dataset(spec);
  CHECK(same.points == data.points);
  spec.seed = 32;
  LabeledDataset other = generate_dataset(spec);
  CHECK(other.points != data.points);
}

TEST_CASE("an impossible margin exhausts the sample budget") {
  DatasetSpec spec;
  spec.conic = preset_conic("circle");
  spec.box = preset_box("circle");
  spec.samples_per_class = 5;
  spec.margin = 1e6;
  CHECK_THROWS_AS(generate_dataset(spec), budget_error);
}

TEST_CASE("five boundary samples re-fit the generating conic") {
  SymmetricMatrix truth = preset_conic("ellipse");
  std::vector<std::vector<double>> points =
      sample_on_conic(truth, 5, preset_box("ellipse"), 37);
  ConicFitResult result = fit_exact(points);
  ConicVector expected = tau(truth).normalized();
  CHECK(std::abs(result.conic.dot(expected)) >= 1.0 - 1e-7);
}

TEST_CASE("dataset csv round trips to full precision") {
  DatasetSpec spec;
  spec.conic = preset_conic("hyperbola");
  spec.box = preset_box("hyperbola");
  spec.samples_per_class = 25;
  spec.margin = 0.02;
  spec.noise_sigma = 0.01;
  spec.seed = 41;
  LabeledDataset data = generate_dataset(spec);

  auto path = temp_file("roundtrip.csv");
  write_dataset_csv(path, data);
  LabeledDataset loaded = read_dataset_csv(path);
  CHECK(loaded.dimension == data.dimension);
  CHECK(loaded.points == data.points);
  CHECK(loaded.labels == data.labels);
  std::filesystem::remove(path);
}

TEST_CASE("a label-free points file reads as unlabeled data") {
  auto path = temp_file("points.csv");
  io::write_text_file_atomic(path, "x1,x2\n1,0\n-1,0\n0,1\n0,-1\n0.5,0.5\n");
  LabeledDataset data = read_dataset_csv(path);
  CHECK(data.dimension == 2);
  CHECK(data.size() == 5);
  CHECK(data.labels == std::vector<int>(5, 0));
  std::filesystem::remove(path);

  auto bad = temp_file("bad.csv");
  io::write_text_file_atomic(bad, "x1,x2,label\n1,0,+2\n");
  CHECK_THROWS_AS(read_dataset_csv(bad), std::invalid_argument);
  std::filesystem::remove(bad);
}

TEST_CASE("preset names resolve and unknown ones do not") {
  for (const std::string& name : preset_names()) {
    CHECK(preset_conic(name).size() == 3);
    CHECK(preset_box(name).dimension() == 2);
  }
  CHECK_THROWS_AS(preset_conic("banana"), std::invalid_argument);
}

TEST_CASE("svg output is deterministic and structurally sound") {
  DatasetSpec spec;
  spec.conic = preset_conic("circle");
  spec.box = preset_box("circle");
  spec.samples_per_class = 20;
  spec.margin = 0.05;
  spec.seed = 43;
  LabeledDataset data = generate_dataset(spec);

  PlotSpec plot;
  plot.bounds = plot_bounds(data);
  plot.grid_samples = 100;
  std::string once = render_plot(&data, &spec.conic, plot);
  std::string twice = render_plot(&data, &spec.conic, plot);
  CHECK(once == twice);
  CHECK(once.find("<svg") != std::string::npos);
  CHECK(once.find("</svg>") != std::string::npos);
  // One cross or diamond path per point, plus the conic path.
  std::size_t paths = 0, at = 0;
  while ((at = once.find("<path", at)) != std::string::npos) {
    ++paths;
    at += 5;
  }
  CHECK(paths == data.size() + 1);

  auto path = temp_file("plot.svg");
  write_plot(path, &data, &spec.conic, plot);
  CHECK(io::read_text_file(path) == once);
  std::filesystem::remove(path);

  PlotSpec bad;
  bad.width = 0;
  bad.bounds = plot.bounds;
  CHECK_THROWS_AS(render_plot(&data, &spec.conic, bad), std::invalid_argument);
}

TEST_CASE("the traced conic curve stays near the zero set") {
  SymmetricMatrix conic = preset_conic("ellipse");
  PlotSpec plot;
  plot.bounds = Box{{-2.0, -2.0}, {2.0, 2.0}};
  plot.draw_classes = false;
  std::string svg = render_plot(nullptr, &conic, plot);

  // Pull a few traced screen points back to world coordinates and check
  // they sit close to the curve.
  std::size_t d = svg.find(" d=\"M", svg.find("stroke=\"#1a6e1a\""));
  REQUIRE(d != std::string::npos);
  std::size_t start = d + 4;
  std::size_t end = svg.find('"', start);
  std::string path_data = svg.substr(start, end - start);
  int checked = 0;
  std::size_t at = 0;
  while ((at = path_data.find('M', at)) != std::string::npos && checked < 20) {
    double sx = 0.0, sy = 0.0;
    if (std::sscanf(path_data.c_str() + at + 1, "%lf %lf", &sx, &sy) == 2) {
      // Invert the fixed 40 px pad mapping for the 640 x 640 default.
      double wx = -2.0 + (sx - 40.0) / 560.0 * 4.0;
      double wy = -2.0 + (640.0 - 40.0 - sy) / 560.0 * 4.0;
      std::vector<double> p{wx, wy};
      CHECK(std::abs(incidence(p, conic)) <=
            0.05 * conic.frobenius_norm());
      ++checked;
    }
    ++at;
  }
  CHECK(checked >= 10);
}
