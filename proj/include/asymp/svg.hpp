#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace asymp {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

// Self-contained 720x400 line chart.  Nonfinite points break the polyline
// (useful for tables where a column goes to infinity).  Log axes require the
// finite data on that axis to be strictly positive.  Output depends only on
// the arguments, so identical inputs give identical bytes.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           std::span<const PlotSeries> series, bool log_x = false,
                           bool log_y = false);

// 520x520 polar plot of a radius profile r(theta), theta in radians.
std::string svg_polar_profile(const std::string& title,
                              std::span<const std::pair<double, double>> theta_r);

// Stitch complete panels into one vertically stacked document.
std::string svg_stack(std::span<const std::string> panels);

}  // namespace asymp
