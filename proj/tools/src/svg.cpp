#include "damposc/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace damposc::cli {

namespace {

constexpr double kWidth = 820.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 190.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SvgPlot& plot) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = 0.0;
  double y_hi = -x_lo;
  for (const auto& c : plot.curves) {
    for (double v : c.x) x_lo = std::min(x_lo, v), x_hi = std::max(x_hi, v);
    for (double v : c.y) y_lo = std::min(y_lo, v), y_hi = std::max(y_hi, v);
  }
  if (!(x_lo < x_hi)) x_lo = 0.0, x_hi = 1.0;
  if (!(y_lo < y_hi)) y_hi = y_lo + 1.0;
  y_hi *= 1.05;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  const auto sy = [&](double y) { return kTop + ph - (y - y_lo) / (y_hi - y_lo) * ph; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"28\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
                     kLeft + pw / 2, escape(plot.title));
  svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" stroke=\"black\"/>\n",
                     kLeft, kTop, pw, ph);

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>"
        "<text x=\"{0:.1f}\" y=\"{3:.1f}\" text-anchor=\"middle\">{4:.3g}</text>\n",
        sx(xv), kTop + ph, kTop + ph + 5, kTop + ph + 20, xv);
    svg += fmt::format(
        "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>"
        "<text x=\"{3:.1f}\" y=\"{4:.1f}\" text-anchor=\"end\">{5:.3g}</text>\n",
        kLeft - 5, sy(yv), kLeft, kLeft - 8, sy(yv) + 4, yv);
  }
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
                     kHeight - 15, escape(plot.x_label));
  svg += fmt::format("<text x=\"20\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.1f})\">{1}</text>\n",
                     kTop + ph / 2, escape(plot.y_label));

  int legend_row = 0;
  for (const auto& c : plot.curves) {
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{} points=\"", c.color,
                       c.dashed ? "1" : "1.6", c.dashed ? " stroke-dasharray=\"4 3\"" : "");
    const std::size_t n = std::min(c.x.size(), c.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      svg += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", sx(c.x[i]), sy(c.y[i]));
    }
    svg += "\"/>\n";
    if (!c.label.empty()) {
      const double ly = kTop + 10 + 16 * legend_row++;
      const double lx = kWidth - kRight + 15;
      svg += fmt::format(
          "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>"
          "<text x=\"{5:.1f}\" y=\"{6:.1f}\">{7}</text>\n",
          lx, ly, lx + 22, c.color, c.dashed ? " stroke-dasharray=\"4 3\"" : "", lx + 28, ly + 4, escape(c.label));
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace damposc::cli
