#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "bdlword/bdl.hpp"
#include "bdlword/fixed_point.hpp"

namespace bdlword {

struct SvgOptions {
  double width = 1200.0;
  double height = 320.0;
};

/// Static SVG of a geometric representation: one horizontal axis with tick
/// marks at the points x_n, letter labels on the gaps, tick marks at the
/// lattice eta Z below the axis, and the deviation |x_n - eta n| as a curve
/// above it.
inline std::string representation_svg(const GeometricRepresentation<double>& rep,
                                      const Window& window,
                                      const SvgOptions& options = {}) {
  const double w = options.width, h = options.height;
  const double margin = 40.0;
  const double axis_y = h * 0.62;
  const double lattice_y = axis_y + 26.0;
  const double dev_base = axis_y - 24.0;

  double xmin = rep.x(rep.n_min), xmax = rep.x(rep.n_min);
  double dev_max = 0.0;
  auto devs = deviation_series(rep);
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n) {
    xmin = std::min(xmin, rep.x(n));
    xmax = std::max(xmax, rep.x(n));
    dev_max = std::max(dev_max, devs[static_cast<std::size_t>(n - rep.n_min)]);
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  const double scale = (w - 2.0 * margin) / (xmax - xmin);
  auto sx = [&](double x) { return margin + (x - xmin) * scale; };
  const double dev_scale = dev_max > 0.0 ? (dev_base - 16.0) / dev_max : 1.0;

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // main axis and point ticks
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << (w - margin)
     << "\" y2=\"" << axis_y << "\"/>\n";
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n)
    os << "<line x1=\"" << sx(rep.x(n)) << "\" y1=\"" << (axis_y - 7) << "\" x2=\""
       << sx(rep.x(n)) << "\" y2=\"" << (axis_y + 7) << "\"/>\n";
  os << "</g>\n";

  // letter labels on the gaps [x_n, x_{n+1})
  os << "<g font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">\n";
  for (std::int64_t n = rep.n_min; n < rep.n_max; ++n) {
    char letter = window.alphabet().letter(window.letter(n));
    double mid = 0.5 * (sx(rep.x(n)) + sx(rep.x(n + 1)));
    os << "<text x=\"" << mid << "\" y=\"" << (axis_y - 11) << "\">" << letter
       << "</text>\n";
  }
  os << "</g>\n";

  // origin marker
  os << "<text font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" x=\""
     << sx(rep.x(0)) << "\" y=\"" << (axis_y + 20) << "\">0</text>\n";

  // lattice ticks eta Z
  os << "<g stroke=\"#cc2222\" stroke-width=\"1\" class=\"lattice\">\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << lattice_y << "\" x2=\"" << (w - margin)
     << "\" y2=\"" << lattice_y << "\"/>\n";
  std::int64_t k_lo = static_cast<std::int64_t>(std::ceil(xmin / rep.eta));
  std::int64_t k_hi = static_cast<std::int64_t>(std::floor(xmax / rep.eta));
  for (std::int64_t k = k_lo; k <= k_hi; ++k)
    os << "<line x1=\"" << sx(rep.eta * static_cast<double>(k)) << "\" y1=\""
       << (lattice_y - 5) << "\" x2=\"" << sx(rep.eta * static_cast<double>(k))
       << "\" y2=\"" << (lattice_y + 5) << "\"/>\n";
  os << "</g>\n";

  // deviation curve |x_n - eta n| over position n (plotted against x_n)
  os << "<polyline fill=\"none\" stroke=\"#2244cc\" stroke-width=\"1\" points=\"";
  for (std::int64_t n = rep.n_min; n <= rep.n_max; ++n) {
    double dev = devs[static_cast<std::size_t>(n - rep.n_min)];
    os << sx(rep.x(n)) << "," << (dev_base - dev * dev_scale) << " ";
  }
  os << "\"/>\n";

  std::ostringstream legend;
  legend.precision(6);
  legend << "eta = " << rep.eta << ", lengths =";
  for (const auto& l : rep.lengths) legend << " " << l;
  legend << ", max deviation = " << dev_max;
  os << "<text font-family=\"monospace\" font-size=\"13\" x=\"" << margin << "\" y=\""
     << 18 << "\">" << legend.str() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace bdlword
