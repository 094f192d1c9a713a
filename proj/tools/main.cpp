// Command-line surface: dataset generation around ground-truth conics,
// exact conic fitting, perceptron training, classification, and raw
// wedge-and-dual output, with optional SVG plots.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperconic/conic_space.hpp"
#include "hyperconic/dataset.hpp"
#include "hyperconic/errors.hpp"
#include "hyperconic/fit.hpp"
#include "hyperconic/io.hpp"
#include "hyperconic/perceptron.hpp"
#include "hyperconic/svg.hpp"

namespace hc = hyperconic;

namespace {

hc::Box parse_box(const std::string& text, int m) {
  std::vector<double> values = hc::io::split_csv(text);
  if (static_cast<int>(values.size()) != 2 * m) {
    throw std::invalid_argument(
        "--box needs lo1,hi1,...,lo" + std::to_string(m) + ",hi" +
        std::to_string(m));
  }
  hc::Box box;
  for (int i = 0; i < m; ++i) {
    box.lo.push_back(values[2 * i]);
    box.hi.push_back(values[2 * i + 1]);
  }
  return box;
}

std::string weights_line(const std::vector<double>& w) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ", ";
    std::snprintf(buf, sizeof(buf), "%.6g", w[i]);
    out += buf;
  }
  return out + ")";
}

std::string conic_report(const hc::ConicVector& conic,
                         const std::vector<double>& residuals) {
  hc::SymmetricMatrix matrix = hc::tau_inv(conic);
  std::ostringstream out;
  out << "conic vector: " << conic.to_csv_line() << '\n'
      << "matrix upper triangle: " << matrix.to_csv_line() << '\n';
  if (matrix.size() == 3) {
    hc::StandardForm form = hc::classify_conic(matrix);
    out << "kind: " << hc::to_string(form.kind) << '\n'
        << "equation: " << form.equation() << '\n';
  }
  if (!residuals.empty()) {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, std::abs(r));
    out << "max |residual|: " << worst << '\n';
  }
  return out.str();
}

void maybe_write_svg(const std::string& svg_path, const hc::LabeledDataset* data,
                     const hc::SymmetricMatrix* conic, int width, int height) {
  if (svg_path.empty()) return;
  hc::PlotSpec spec;
  spec.width = width;
  spec.height = height;
  spec.bounds = data != nullptr && data->dimension == 2
                    ? hc::plot_bounds(*data)
                    : hc::Box{{-3.0, -3.0}, {3.0, 3.0}};
  spec.draw_classes = data != nullptr;
  spec.draw_conic = conic != nullptr && conic->size() == 3;
  hc::write_plot(svg_path, data, conic, spec);
}

int run(int argc, char** argv) {
  CLI::App app{"Hyperconic decision boundaries: Clifford-algebra conic "
               "fitting and elliptical perceptron training"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate",
                                 "Sample a labeled two-class dataset around a "
                                 "ground-truth conic");
  std::string gen_preset, gen_conic, gen_box, gen_output = "dataset.csv";
  int gen_samples = 100;
  double gen_margin = 0.05, gen_noise = 0.0;
  std::uint64_t gen_seed = 1;
  gen->add_option("--preset", gen_preset,
                  "Named conic: circle, ellipse, shifted-ellipse, hyperbola, "
                  "parabola");
  gen->add_option("--conic", gen_conic,
                  "Upper-triangle csv a11,a12,a13,a22,a23,a33");
  gen->add_option("--samples", gen_samples, "Samples per class");
  gen->add_option("--margin", gen_margin,
                  "Excluded |incidence| band around the boundary");
  gen->add_option("--box", gen_box, "Sampling window lo1,hi1,lo2,hi2,...");
  gen->add_option("--noise", gen_noise, "Coordinate noise sigma");
  gen->add_option("--seed", gen_seed, "Sampler seed");
  gen->add_option("--output", gen_output, "Dataset csv path");

  // fit
  auto* fit = app.add_subcommand("fit",
                                 "Fit the conic through the points of a csv "
                                 "file (exact when count = D-1)");
  std::string fit_input, fit_output, fit_svg;
  int fit_width = 640, fit_height = 640;
  fit->add_option("--input", fit_input, "Points csv")->required();
  fit->add_option("--output", fit_output, "Also write the report here");
  fit->add_option("--svg", fit_svg, "Write an svg plot here");
  fit->add_option("--svg-width", fit_width, "Plot width");
  fit->add_option("--svg-height", fit_height, "Plot height");

  // train
  auto* train = app.add_subcommand("train",
                                   "Train a perceptron on a labeled dataset "
                                   "and extract the decision conic");
  std::string train_input, train_output = "model.txt", train_svg;
  std::string train_transfer = "bipolar-sigmoid", train_flavor = "elliptical";
  double train_eta = 0.05, train_beta = 1.0, train_target = 1.0;
  int train_epochs = 5000, train_width = 640, train_height = 640;
  std::uint64_t train_seed = 1;
  train->add_option("--input", train_input, "Labeled dataset csv")->required();
  train->add_option("--eta", train_eta, "Learning rate");
  train->add_option("--epochs", train_epochs, "Epoch cap");
  train->add_option("--target-accuracy", train_target,
                    "Stop once training accuracy reaches this");
  train->add_option("--transfer", train_transfer,
                    "bipolar-sigmoid or bipolar-sine");
  train->add_option("--beta", train_beta, "Transfer steepness");
  train->add_option("--seed", train_seed, "Init/shuffle seed");
  train->add_option("--flavor", train_flavor, "elliptical or spherical");
  train->add_option("--output", train_output, "Model file path");
  train->add_option("--svg", train_svg, "Write an svg plot here");
  train->add_option("--svg-width", train_width, "Plot width");
  train->add_option("--svg-height", train_height, "Plot height");

  // classify
  auto* classify = app.add_subcommand("classify",
                                      "Label points with a trained model");
  std::string cls_model, cls_input, cls_output;
  classify->add_option("--model", cls_model, "Model file")->required();
  classify->add_option("--input", cls_input, "Points csv")->required();
  classify->add_option("--output", cls_output, "Write predictions csv here");

  // dual
  auto* dual_cmd = app.add_subcommand("dual",
                                      "Raw wedge-and-dual conic vector "
                                      "through D-1 points");
  std::string dual_input;
  dual_cmd->add_option("--input", dual_input, "Points csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's exit codes: 0 stays 0 (--help), all else is usage.
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (gen->parsed()) {
    hc::DatasetSpec spec;
    if (!gen_preset.empty()) {
      spec.conic = hc::preset_conic(gen_preset);
      spec.box = hc::preset_box(gen_preset);
    } else if (!gen_conic.empty()) {
      spec.conic = hc::SymmetricMatrix::from_csv_line(gen_conic);
    } else {
      throw std::invalid_argument("generate needs --preset or --conic");
    }
    if (!gen_box.empty()) {
      spec.box = parse_box(gen_box, spec.conic.size() - 1);
    }
    if (spec.box.dimension() == 0) {
      throw std::invalid_argument("--box is required with --conic");
    }
    spec.samples_per_class = gen_samples;
    spec.margin = gen_margin;
    spec.noise_sigma = gen_noise;
    spec.seed = gen_seed;
    hc::LabeledDataset data = hc::generate_dataset(spec);
    hc::write_dataset_csv(gen_output, data);
    std::cout << "wrote " << data.size() << " samples to " << gen_output
              << '\n';
    return 0;
  }

  if (fit->parsed()) {
    hc::LabeledDataset data = hc::read_dataset_csv(fit_input);
    const int d =
        (data.dimension + 1) * (data.dimension + 2) / 2;
    hc::ConicVector conic;
    std::vector<double> residuals;
    if (static_cast<int>(data.size()) == d - 1) {
      hc::ConicFitResult result = hc::fit_exact(data.points);
      conic = result.conic;
      residuals = result.residuals;
    } else {
      conic = hc::fit_oracle(data.points);
      for (const auto& p : data.points) {
        residuals.push_back(hc::embed_point(p).coords.dot(conic));
      }
    }
    std::string report = conic_report(conic, residuals);
    std::cout << report;
    if (!fit_output.empty()) hc::io::write_text_file_atomic(fit_output, report);
    hc::SymmetricMatrix matrix = hc::tau_inv(conic);
    maybe_write_svg(fit_svg, &data, &matrix, fit_width, fit_height);
    return 0;
  }

  if (train->parsed()) {
    hc::LabeledDataset data = hc::read_dataset_csv(train_input);
    hc::TrainConfig config;
    config.learning_rate = train_eta;
    config.max_epochs = train_epochs;
    config.target_accuracy = train_target;
    config.seed = train_seed;
    config.transfer.kind = hc::transfer_kind_from_string(train_transfer);
    config.transfer.beta = train_beta;
    auto [model, report] =
        hc::train(data, config, hc::flavor_from_string(train_flavor));
    std::cout << "epochs: " << report.epochs << '\n'
              << "accuracy: " << report.accuracy << '\n'
              << "final loss: " << report.loss_curve.back() << '\n'
              << "weights: " << weights_line(model.weights) << '\n';
    std::optional<hc::SymmetricMatrix> matrix;
    if (model.flavor == hc::PerceptronFlavor::kElliptical) {
      auto [extracted, form] = hc::extract_conic(model);
      matrix = extracted;
      if (model.input_dimension == 2) {
        std::cout << "kind: " << hc::to_string(form.kind) << '\n'
                  << "equation: " << form.equation() << '\n';
      }
    }
    hc::write_model(train_output, model);
    std::cout << "model written to " << train_output << '\n';
    maybe_write_svg(train_svg, &data, matrix ? &*matrix : nullptr, train_width,
                    train_height);
    return 0;
  }

  if (classify->parsed()) {
    hc::PerceptronModel model = hc::read_model(cls_model);
    hc::LabeledDataset data = hc::read_dataset_csv(cls_input);
    std::size_t correct = 0, labeled = 0;
    std::ostringstream out;
    for (int i = 1; i <= data.dimension; ++i) out << 'x' << i << ',';
    out << "label\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
      double y = hc::forward(model, data.points[i]);
      int predicted = y > 0.0 ? 1 : -1;
      out << hc::io::join_csv(data.points[i]) << ','
          << (predicted > 0 ? "+1" : "-1") << '\n';
      if (data.labels[i] != 0) {
        ++labeled;
        if (predicted == data.labels[i]) ++correct;
      }
    }
    if (cls_output.empty()) {
      std::cout << out.str();
    } else {
      hc::io::write_text_file_atomic(cls_output, out.str());
      std::cout << "wrote predictions to " << cls_output << '\n';
    }
    if (labeled > 0) {
      std::cout << "accuracy: "
                << static_cast<double>(correct) / static_cast<double>(labeled)
                << " over " << labeled << " labeled points\n";
    }
    return 0;
  }

  if (dual_cmd->parsed()) {
    hc::LabeledDataset data = hc::read_dataset_csv(dual_input);
    hc::ConicFitResult result = hc::fit_exact(data.points);
    std::cout << result.conic.to_csv_line() << '\n';
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hc::degeneracy_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hc::ambiguity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hc::divergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hc::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
