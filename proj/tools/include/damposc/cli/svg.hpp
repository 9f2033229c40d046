#pragma once

#include <string>
#include <vector>

namespace damposc::cli {

struct SvgCurve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
  bool dashed = false;
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgCurve> curves;
};

// Self-contained single-panel line plot.
std::string render_svg(const SvgPlot& plot);

}  // namespace damposc::cli
