// Minimal SVG step-plot writer. No plotting dependency: sweep outputs are
// plain step functions and a polyline is all they need.
#pragma once

#include <string>
#include <vector>

namespace cglab {

struct StepPlotSeries {
  std::vector<double> x;
  std::vector<double> y;
};

// Horizontal-then-vertical steps through the points, light axes, fixed
// 640x400 canvas. Deterministic text output.
std::string svg_step_plot(const StepPlotSeries& series,
                          const std::string& x_label,
                          const std::string& y_label);

}  // namespace cglab
