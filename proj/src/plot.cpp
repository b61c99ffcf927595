#include "cglab/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cglab {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string svg_step_plot(const StepPlotSeries& series,
                          const std::string& x_label,
                          const std::string& y_label) {
  if (series.x.size() != series.y.size() || series.x.empty()) {
    throw std::invalid_argument("step plot needs matching nonempty series");
  }
  const double width = 640, height = 400, margin = 48;
  double x_lo = series.x.front(), x_hi = series.x.front();
  double y_lo = series.y.front(), y_hi = series.y.front();
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    x_lo = std::min(x_lo, series.x[i]);
    x_hi = std::max(x_hi, series.x[i]);
    y_lo = std::min(y_lo, series.y[i]);
    y_hi = std::max(y_hi, series.y[i]);
  }
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_hi = y_lo + 1;
  const auto px = [&](double x) {
    return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin);
  };
  const auto py = [&](double y) {
    return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(height - margin)
     << "\" x2=\"" << fmt(width - margin) << "\" y2=\""
     << fmt(height - margin) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin)
     << "\" x2=\"" << fmt(margin) << "\" y2=\"" << fmt(height - margin)
     << "\" stroke=\"black\"/>\n";

  os << "<path fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    if (i == 0) {
      os << "M" << fmt(px(series.x[i])) << " " << fmt(py(series.y[i]));
    } else {
      // Horizontal run at the previous level, then the jump.
      os << " L" << fmt(px(series.x[i])) << " " << fmt(py(series.y[i - 1]));
      os << " L" << fmt(px(series.x[i])) << " " << fmt(py(series.y[i]));
    }
  }
  os << "\"/>\n";

  os << "<text x=\"" << fmt(width / 2) << "\" y=\"" << fmt(height - 12)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt(height / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fmt(height / 2) << ")\">" << y_label << "</text>\n";
  os << "<text x=\"" << fmt(margin) << "\" y=\"" << fmt(height - margin + 16)
     << "\" font-size=\"11\">" << fmt(x_lo) << "</text>\n";
  os << "<text x=\"" << fmt(width - margin) << "\" y=\""
     << fmt(height - margin + 16) << "\" font-size=\"11\" text-anchor=\"end\">"
     << fmt(x_hi) << "</text>\n";
  os << "<text x=\"" << fmt(margin - 6) << "\" y=\"" << fmt(py(y_lo))
     << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y_lo) << "</text>\n";
  os << "<text x=\"" << fmt(margin - 6) << "\" y=\"" << fmt(py(y_hi))
     << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y_hi) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace cglab
