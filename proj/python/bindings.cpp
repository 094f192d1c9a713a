#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperconic/conformal.hpp"
#include "hyperconic/conic_space.hpp"
#include "hyperconic/dataset.hpp"
#include "hyperconic/errors.hpp"
#include "hyperconic/fit.hpp"
#include "hyperconic/multivector.hpp"
#include "hyperconic/perceptron.hpp"

namespace py = pybind11;
using namespace hyperconic;

namespace {

SymmetricMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  int n = static_cast<int>(rows.size());
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("matrix rows must be square");
    }
    for (int j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12 *
              (1.0 + std::abs(rows[i][j]))) {
        throw std::invalid_argument("matrix is not symmetric");
      }
      a.set(i, j, rows[i][j]);
    }
  }
  return a;
}

std::vector<std::vector<double>> matrix_to_rows(const SymmetricMatrix& a) {
  std::vector<std::vector<double>> rows(a.size(),
                                        std::vector<double>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) rows[i][j] = a.at(i, j);
  }
  return rows;
}

LabeledDataset dataset_from_lists(const std::vector<std::vector<double>>& points,
                                  const std::vector<int>& labels) {
  LabeledDataset data;
  data.dimension = points.empty() ? 0 : static_cast<int>(points.front().size());
  data.points = points;
  data.labels = labels;
  return data;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford-algebra conic fitting and elliptical perceptrons";

  py::register_exception<degeneracy_error>(m, "DegeneracyError");
  py::register_exception<ambiguity_error>(m, "AmbiguityError");
  py::register_exception<divergence_error>(m, "DivergenceError");
  py::register_exception<budget_error>(m, "BudgetError");

  py::class_<Signature>(m, "Signature")
      .def(py::init<int, int>(), py::arg("positive"), py::arg("negative"))
      .def_property_readonly("positive", &Signature::positive)
      .def_property_readonly("negative", &Signature::negative)
      .def_property_readonly("dimension", &Signature::dimension)
      .def("metric", &Signature::metric, py::arg("index"));

  py::class_<Multivector>(m, "Multivector")
      .def_static("scalar", &Multivector::scalar)
      .def_static("basis_vector", &Multivector::basis_vector)
      .def_static("basis_blade", &Multivector::basis_blade, py::arg("sig"),
                  py::arg("mask"), py::arg("coefficient") = 1.0)
      .def_static(
          "vector",
          [](const Signature& sig, const std::vector<double>& coords) {
            return Multivector::vector(sig, coords);
          })
      .def("coefficient", &Multivector::coefficient)
      .def("scalar_part", &Multivector::scalar_part)
      .def("is_zero", &Multivector::is_zero)
      .def("is_vector", &Multivector::is_vector)
      .def("vector_coords", &Multivector::vector_coords)
      .def("norm", &Multivector::norm)
      .def("terms",
           [](const Multivector& a) {
             py::dict out;
             for (const auto& [mask, coeff] : a.terms()) {
               out[py::int_(mask)] = coeff;
             }
             return out;
           })
      .def("geometric", &geometric_product)
      .def("outer", &outer_product)
      .def("inner", &inner_product)
      .def("dual", [](const Multivector& a) { return dual(a); })
      .def("undual", [](const Multivector& a) { return undual(a); })
      .def("__add__", [](const Multivector& a, const Multivector& b) { return a + b; })
      .def("__sub__", [](const Multivector& a, const Multivector& b) { return a - b; })
      .def("__mul__", [](const Multivector& a, double c) { return c * a; })
      .def("__rmul__", [](const Multivector& a, double c) { return c * a; })
      .def("__neg__", [](const Multivector& a) { return -a; })
      .def("__repr__", &Multivector::to_string);

  m.def("geometric_product", &geometric_product);
  m.def("outer_product", &outer_product);
  m.def("inner_product", &inner_product);
  m.def("wedge_all", [](const std::vector<Multivector>& vs) {
    return wedge_all(vs);
  });
  m.def("pseudoscalar", &pseudoscalar);
  m.def("inverse_pseudoscalar", &inverse_pseudoscalar);
  m.def("opns_contains", &opns_contains, py::arg("blade"), py::arg("x"),
        py::arg("tol") = kDefaultTolerance);
  m.def("ipns_contains", &ipns_contains, py::arg("blade"), py::arg("x"),
        py::arg("tol") = kDefaultTolerance);

  m.def("tau", [](const std::vector<std::vector<double>>& rows) {
    return tau(matrix_from_rows(rows)).coords();
  });
  m.def("tau_inv", [](const std::vector<double>& coords) {
    return matrix_to_rows(tau_inv(ConicVector(coords)));
  });
  m.def("iota", [](const std::vector<double>& x) {
    return matrix_to_rows(iota(x));
  });
  m.def("embed_point", [](const std::vector<double>& x) {
    return embed_point(x).coords.coords();
  });
  m.def("incidence",
        [](const std::vector<double>& x,
           const std::vector<std::vector<double>>& rows) {
          return incidence(x, matrix_from_rows(rows));
        });
  m.def("veronese", [](const std::vector<double>& xh, int m_dim) {
    return veronese(xh, m_dim);
  });
  m.def("index_set", [](int m_dim) { return index_set(m_dim).positions; });

  py::enum_<ConicKind>(m, "ConicKind")
      .value("ELLIPSE", ConicKind::kEllipse)
      .value("HYPERBOLA", ConicKind::kHyperbola)
      .value("PARABOLA", ConicKind::kParabola)
      .value("DEGENERATE", ConicKind::kDegenerate)
      .value("UNCLASSIFIED", ConicKind::kUnclassified);

  py::class_<StandardForm>(m, "StandardForm")
      .def_readonly("kind", &StandardForm::kind)
      .def_readonly("center", &StandardForm::center)
      .def_readonly("semi_axes", &StandardForm::semi_axes)
      .def_readonly("rotation", &StandardForm::rotation)
      .def("equation", &StandardForm::equation)
      .def("__repr__", [](const StandardForm& f) {
        std::ostringstream out;
        out << "StandardForm(" << to_string(f.kind) << ", " << f.equation()
            << ")";
        return out.str();
      });

  m.def("classify_conic", [](const std::vector<std::vector<double>>& rows) {
    return classify_conic(matrix_from_rows(rows));
  });

  py::class_<ConicFitResult>(m, "ConicFitResult")
      .def_property_readonly(
          "conic", [](const ConicFitResult& r) { return r.conic.coords(); })
      .def_property_readonly(
          "matrix",
          [](const ConicFitResult& r) { return matrix_to_rows(r.matrix); })
      .def_readonly("residuals", &ConicFitResult::residuals);

  m.def("fit_exact", [](const std::vector<std::vector<double>>& points) {
    return fit_exact(points);
  });
  m.def("fit_oracle", [](const std::vector<std::vector<double>>& points) {
    return fit_oracle(points).coords();
  });

  m.def("lift", [](const std::vector<double>& x) { return lift(x).coords; });
  m.def("sphere_side",
        [](const std::vector<double>& center, double radius,
           const std::vector<double>& x) {
          return sphere_side(sphere(center, radius), x);
        });

  py::enum_<TransferKind>(m, "TransferKind")
      .value("BIPOLAR_SIGMOID", TransferKind::kBipolarSigmoid)
      .value("BIPOLAR_SINE", TransferKind::kBipolarSine);

  py::enum_<PerceptronFlavor>(m, "PerceptronFlavor")
      .value("ELLIPTICAL", PerceptronFlavor::kElliptical)
      .value("SPHERICAL", PerceptronFlavor::kSpherical);

  py::class_<PerceptronModel>(m, "PerceptronModel")
      .def_readonly("flavor", &PerceptronModel::flavor)
      .def_readonly("input_dimension", &PerceptronModel::input_dimension)
      .def_readonly("weights", &PerceptronModel::weights)
      .def("forward", [](const PerceptronModel& model,
                         const std::vector<double>& x) {
        return forward(model, x);
      });

  py::class_<TrainReport>(m, "TrainReport")
      .def_readonly("epochs", &TrainReport::epochs)
      .def_readonly("accuracy", &TrainReport::accuracy)
      .def_readonly("loss_curve", &TrainReport::loss_curve);

  m.def(
      "train",
      [](const std::vector<std::vector<double>>& points,
         const std::vector<int>& labels, double learning_rate, int max_epochs,
         double target_accuracy, std::uint64_t seed,
         TransferKind transfer, double beta, PerceptronFlavor flavor) {
        TrainConfig config;
        config.learning_rate = learning_rate;
        config.max_epochs = max_epochs;
        config.target_accuracy = target_accuracy;
        config.seed = seed;
        config.transfer = TransferFunction{transfer, beta};
        return train(dataset_from_lists(points, labels), config, flavor);
      },
      py::arg("points"), py::arg("labels"), py::arg("learning_rate") = 0.05,
      py::arg("max_epochs") = 1000, py::arg("target_accuracy") = 1.0,
      py::arg("seed") = 1,
      py::arg("transfer") = TransferKind::kBipolarSigmoid,
      py::arg("beta") = 1.0,
      py::arg("flavor") = PerceptronFlavor::kElliptical);

  m.def("extract_conic", [](const PerceptronModel& model) {
    auto [matrix, form] = extract_conic(model);
    return py::make_tuple(matrix_to_rows(matrix), form);
  });
  m.def("spherical_decision",
        [](const PerceptronModel& model, const std::vector<double>& x) {
          return spherical_decision(model, x);
        });

  m.def(
      "generate_dataset",
      [](const std::vector<std::vector<double>>& conic_rows,
         int samples_per_class, double margin, const std::vector<double>& lo,
         const std::vector<double>& hi, double noise_sigma,
         std::uint64_t seed) {
        DatasetSpec spec;
        spec.conic = matrix_from_rows(conic_rows);
        spec.samples_per_class = samples_per_class;
        spec.margin = margin;
        spec.box = Box{lo, hi};
        spec.noise_sigma = noise_sigma;
        spec.seed = seed;
        LabeledDataset data = generate_dataset(spec);
        return py::make_tuple(data.points, data.labels);
      },
      py::arg("conic"), py::arg("samples_per_class"), py::arg("margin"),
      py::arg("lo"), py::arg("hi"), py::arg("noise_sigma") = 0.0,
      py::arg("seed") = 1);

  m.def("preset_conic", [](const std::string& name) {
    return matrix_to_rows(preset_conic(name));
  });
  m.def("preset_names", &preset_names);
}
