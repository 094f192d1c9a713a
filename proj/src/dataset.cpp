#include "hyperconic/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hyperconic/io.hpp"

namespace hyperconic {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller; engine-only draws keep generation platform-stable.
  double u1 = 0.0;
  do {
    u1 = uniform01(rng);
  } while (u1 == 0.0);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace

LabeledDataset generate_dataset(const DatasetSpec& spec) {
  const int m = spec.conic.size() - 1;
  if (spec.box.dimension() != m ||
      spec.box.hi.size() != spec.box.lo.size()) {
    throw std::invalid_argument("box dimension does not match the conic");
  }
  for (int i = 0; i < m; ++i) {
    if (!(spec.box.lo[i] < spec.box.hi[i])) {
      throw std::invalid_argument("box has an empty side");
    }
  }
  if (spec.samples_per_class < 1) {
    throw std::invalid_argument("need at least one sample per class");
  }
  if (spec.margin < 0.0) {
    throw std::invalid_argument("margin must be non-negative");
  }

  // Work against the unit-norm conic vector so the margin band does not
  // depend on the caller's matrix scale.
  ConicVector direction = tau(spec.conic).normalized();
  SymmetricMatrix unit_conic = tau_inv(direction);

  LabeledDataset data;
  data.dimension = m;
  std::ostringstream meta;
  meta << "uniform box sampler, conic=" << spec.conic.to_csv_line()
       << ", margin=" << spec.margin << ", noise=" << spec.noise_sigma
       << ", seed=" << spec.seed;
  data.metadata = meta.str();

  std::mt19937_64 rng(spec.seed);
  int want_pos = spec.samples_per_class;
  int want_neg = spec.samples_per_class;
  const long budget = 20000L * spec.samples_per_class;
  std::vector<double> x(m);
  for (long attempt = 0; attempt < budget && (want_pos > 0 || want_neg > 0);
       ++attempt) {
    for (int i = 0; i < m; ++i) {
      x[i] = spec.box.lo[i] + (spec.box.hi[i] - spec.box.lo[i]) * uniform01(rng);
    }
    double side = incidence(x, unit_conic);
    if (std::abs(side) < spec.margin) continue;
    int label = side > 0.0 ? 1 : -1;
    int& want = label > 0 ? want_pos : want_neg;
    if (want == 0) continue;
    --want;
    std::vector<double> sample = x;
    if (spec.noise_sigma > 0.0) {
      for (double& c : sample) c += spec.noise_sigma * gaussian(rng);
    }
    data.points.push_back(std::move(sample));
    data.labels.push_back(label);
  }
  if (want_pos > 0 || want_neg > 0) {
    throw budget_error(
        "sample budget exhausted: the box/margin yields too few points of "
        "one class");
  }
  return data;
}

void write_dataset_csv(const std::filesystem::path& path,
                       const LabeledDataset& data) {
  std::ostringstream out;
  for (int i = 1; i <= data.dimension; ++i) out << 'x' << i << ',';
  out << "label\n";
  for (std::size_t r = 0; r < data.size(); ++r) {
    out << io::join_csv(data.points[r]) << ','
        << (data.labels[r] > 0 ? "+1" : "-1") << '\n';
  }
  io::write_text_file_atomic(path, out.str());
}

LabeledDataset read_dataset_csv(const std::filesystem::path& path) {
  std::istringstream in(io::read_text_file(path));
  std::string line;
  LabeledDataset data;
  bool has_label_column = false;
  bool saw_header = false;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find('x') != std::string::npos ||
          line.find("label") != std::string::npos) {
        saw_header = true;
        has_label_column = line.find("label") != std::string::npos;
        std::size_t columns = 1 + std::count(line.begin(), line.end(), ',');
        data.dimension =
            static_cast<int>(columns) - (has_label_column ? 1 : 0);
        continue;
      }
    }
    std::vector<double> fields = io::split_csv(line);
    if (!saw_header && data.dimension == 0) {
      // Headerless: treat every column as a coordinate.
      data.dimension = static_cast<int>(fields.size());
    }
    std::size_t expect = data.dimension + (has_label_column ? 1 : 0);
    if (fields.size() != expect) {
      throw std::invalid_argument("csv row has " +
                                  std::to_string(fields.size()) +
                                  " fields, expected " + std::to_string(expect));
    }
    int label = 0;
    if (has_label_column) {
      double raw = fields.back();
      fields.pop_back();
      if (raw != 1.0 && raw != -1.0) {
        throw std::invalid_argument("labels must be +1 or -1");
      }
      label = raw > 0 ? 1 : -1;
    }
    data.points.push_back(std::move(fields));
    data.labels.push_back(label);
  }
  if (data.points.empty()) {
    throw std::invalid_argument("no data rows in " + path.string());
  }
  return data;
}

std::vector<std::vector<double>> sample_on_conic(const SymmetricMatrix& conic,
                                                 int count, const Box& box,
                                                 std::uint64_t seed,
                                                 double noise_sigma) {
  if (conic.size() != 3 || box.dimension() != 2) {
    throw std::invalid_argument("boundary sampling is implemented for m = 2");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> points;
  const long budget = 20000L * std::max(count, 1);
  for (long attempt = 0; attempt < budget &&
                         static_cast<int>(points.size()) < count;
       ++attempt) {
    double x = box.lo[0] + (box.hi[0] - box.lo[0]) * uniform01(rng);
    // a22 y^2 + 2(a12 x + a23) y + (a11 x^2 + 2 a13 x + a33) = 0.
    double qa = conic.at(1, 1);
    double qb = 2.0 * (conic.at(0, 1) * x + conic.at(1, 2));
    double qc = conic.at(0, 0) * x * x + 2.0 * conic.at(0, 2) * x +
                conic.at(2, 2);
    double y = 0.0;
    if (std::abs(qa) < 1e-14) {
      if (std::abs(qb) < 1e-14) continue;
      y = -qc / qb;
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc < 0.0) continue;
      double root = std::sqrt(disc);
      y = (rng() & 1) ? (-qb + root) / (2.0 * qa) : (-qb - root) / (2.0 * qa);
    }
    if (y < box.lo[1] || y > box.hi[1]) continue;
    std::vector<double> p{x, y};
    if (noise_sigma > 0.0) {
      for (double& c : p) c += noise_sigma * gaussian(rng);
    }
    points.push_back(std::move(p));
  }
  if (static_cast<int>(points.size()) < count) {
    throw budget_error("sample budget exhausted: the conic misses the box");
  }
  return points;
}

SymmetricMatrix preset_conic(const std::string& name) {
  if (name == "circle") {
    return SymmetricMatrix::diagonal(std::vector<double>{1.0, 1.0, -1.0});
  }
  if (name == "ellipse") {
    return tau_inv(ConicVector({0.0, 0.0, -3.30, 5.00, 6.36, 0.0}));
  }
  if (name == "shifted-ellipse") {
    return tau_inv(ConicVector({8.48, 0.0, -2.84, -1.50, -14.43, 0.0}));
  }
  if (name == "hyperbola") {
    return tau_inv(ConicVector({-2.23, 0.0, -8.26, -19.05, 20.2, 0.0}));
  }
  if (name == "parabola") {
    SymmetricMatrix a(3);
    a.set(0, 0, 1.0);
    a.set(1, 2, -0.5);
    return a;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

Box preset_box(const std::string& name) {
  if (name == "circle" || name == "ellipse") {
    return Box{{-2.0, -2.0}, {2.0, 2.0}};
  }
  if (name == "shifted-ellipse") {
    return Box{{-1.0, -3.0}, {9.0, 3.0}};
  }
  if (name == "hyperbola") {
    return Box{{-3.0, -3.0}, {3.0, 3.0}};
  }
  if (name == "parabola") {
    return Box{{-3.0, -1.0}, {3.0, 5.0}};
  }
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"circle", "ellipse", "shifted-ellipse", "hyperbola", "parabola"};
}

}  // namespace hyperconic
