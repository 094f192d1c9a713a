#include "hyperconic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hyperconic/io.hpp"

namespace hyperconic {
namespace {

constexpr double kPad = 40.0;  // pixels around the world window

struct Mapper {
  Box world;
  double width, height;

  double sx(double x) const {
    return kPad + (x - world.lo[0]) / (world.hi[0] - world.lo[0]) *
                      (width - 2.0 * kPad);
  }
  double sy(double y) const {
    // SVG y grows downward.
    return height - kPad -
           (y - world.lo[1]) / (world.hi[1] - world.lo[1]) *
               (height - 2.0 * kPad);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void marching_squares(std::ostringstream& out, const SymmetricMatrix& conic,
                      const PlotSpec& spec, const Mapper& map) {
  const int n = spec.grid_samples;
  const Box& w = spec.bounds;
  std::vector<double> values(static_cast<std::size_t>(n + 1) * (n + 1));
  std::vector<double> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = w.lo[0] + (w.hi[0] - w.lo[0]) * i / n;
    ys[i] = w.lo[1] + (w.hi[1] - w.lo[1]) * i / n;
  }
  std::vector<double> p(2);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      p[0] = xs[i];
      p[1] = ys[j];
      values[static_cast<std::size_t>(j) * (n + 1) + i] = incidence(p, conic);
    }
  }
  auto at = [&](int i, int j) {
    return values[static_cast<std::size_t>(j) * (n + 1) + i];
  };
  auto lerp = [](double a, double b, double fa, double fb) {
    return a + (b - a) * (fa / (fa - fb));
  };

  out << "  <path fill=\"none\" stroke=\"#1a6e1a\" stroke-width=\"1.5\" d=\"";
  // Each cell contributes up to two segments; corners: 0=(i,j) 1=(i+1,j)
  // 2=(i+1,j+1) 3=(i,j+1); edge points on sign changes.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double f0 = at(i, j), f1 = at(i + 1, j), f2 = at(i + 1, j + 1),
             f3 = at(i, j + 1);
      int mask = (f0 > 0.0 ? 1 : 0) | (f1 > 0.0 ? 2 : 0) | (f2 > 0.0 ? 4 : 0) |
                 (f3 > 0.0 ? 8 : 0);
      if (mask == 0 || mask == 15) continue;
      double ex[4][2];  // edge crossing coordinates: bottom, right, top, left
      bool has[4] = {false, false, false, false};
      if ((f0 > 0.0) != (f1 > 0.0)) {
        ex[0][0] = lerp(xs[i], xs[i + 1], f0, f1);
        ex[0][1] = ys[j];
        has[0] = true;
      }
      if ((f1 > 0.0) != (f2 > 0.0)) {
        ex[1][0] = xs[i + 1];
        ex[1][1] = lerp(ys[j], ys[j + 1], f1, f2);
        has[1] = true;
      }
      if ((f3 > 0.0) != (f2 > 0.0)) {
        ex[2][0] = lerp(xs[i], xs[i + 1], f3, f2);
        ex[2][1] = ys[j + 1];
        has[2] = true;
      }
      if ((f0 > 0.0) != (f3 > 0.0)) {
        ex[3][0] = xs[i];
        ex[3][1] = lerp(ys[j], ys[j + 1], f0, f3);
        has[3] = true;
      }
      int pts[4], npts = 0;
      for (int e = 0; e < 4; ++e) {
        if (has[e]) pts[npts++] = e;
      }
      auto segment = [&](int a, int b) {
        out << 'M' << num(map.sx(ex[a][0])) << ' ' << num(map.sy(ex[a][1]))
            << 'L' << num(map.sx(ex[b][0])) << ' ' << num(map.sy(ex[b][1]));
      };
      if (npts == 2) {
        segment(pts[0], pts[1]);
      } else if (npts == 4) {
        // Saddle cell: split by the center sample.
        p[0] = 0.5 * (xs[i] + xs[i + 1]);
        p[1] = 0.5 * (ys[j] + ys[j + 1]);
        bool center_pos = incidence(p, conic) > 0.0;
        if ((f0 > 0.0) == center_pos) {
          segment(0, 1);
          segment(2, 3);
        } else {
          segment(3, 0);
          segment(1, 2);
        }
      }
    }
  }
  out << "\"/>\n";
}

}  // namespace

Box plot_bounds(const LabeledDataset& data) {
  Box b{{-2.0, -2.0}, {2.0, 2.0}};
  if (data.points.empty() || data.dimension != 2) return b;
  b.lo = {data.points[0][0], data.points[0][1]};
  b.hi = b.lo;
  for (const auto& p : data.points) {
    for (int k = 0; k < 2; ++k) {
      b.lo[k] = std::min(b.lo[k], p[k]);
      b.hi[k] = std::max(b.hi[k], p[k]);
    }
  }
  for (int k = 0; k < 2; ++k) {
    double pad = 0.05 * std::max(b.hi[k] - b.lo[k], 1e-6);
    b.lo[k] -= pad;
    b.hi[k] += pad;
  }
  return b;
}

std::string render_plot(const LabeledDataset* data,
                        const SymmetricMatrix* conic, const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) {
    throw std::invalid_argument("plot dimensions must be positive");
  }
  if (spec.bounds.dimension() != 2) {
    throw std::invalid_argument("plotting needs a 2-dimensional window");
  }
  Mapper map{spec.bounds, static_cast<double>(spec.width),
             static_cast<double>(spec.height)};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << ' ' << spec.height << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (spec.draw_conic && conic != nullptr) {
    marching_squares(out, *conic, spec, map);
  }

  if (spec.draw_classes && data != nullptr) {
    if (data->dimension != 2) {
      throw std::invalid_argument("plotting needs 2-dimensional data");
    }
    const double r = 4.0;
    out << "  <g stroke=\"#b03030\" stroke-width=\"1.2\" fill=\"none\">\n";
    for (std::size_t i = 0; i < data->size(); ++i) {
      if (data->labels[i] != 1) continue;
      double cx = map.sx(data->points[i][0]), cy = map.sy(data->points[i][1]);
      out << "    <path d=\"M" << num(cx - r) << ' ' << num(cy) << 'H'
          << num(cx + r) << 'M' << num(cx) << ' ' << num(cy - r) << 'V'
          << num(cy + r) << "\"/>\n";
    }
    out << "  </g>\n  <g stroke=\"#3030b0\" stroke-width=\"1.2\" fill=\"none\">\n";
    for (std::size_t i = 0; i < data->size(); ++i) {
      if (data->labels[i] == 1) continue;
      double cx = map.sx(data->points[i][0]), cy = map.sy(data->points[i][1]);
      out << "    <path d=\"M" << num(cx) << ' ' << num(cy - r) << 'L'
          << num(cx + r) << ' ' << num(cy) << 'L' << num(cx) << ' '
          << num(cy + r) << 'L' << num(cx - r) << ' ' << num(cy) << "Z\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_plot(const std::filesystem::path& path, const LabeledDataset* data,
                const SymmetricMatrix* conic, const PlotSpec& spec) {
  io::write_text_file_atomic(path, render_plot(data, conic, spec));
}

}  // namespace hyperconic
