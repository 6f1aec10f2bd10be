#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace n2d::harness {

struct Series {
  std::string label;
  std::vector<double> x, y;
  /// Optional band (e.g. interquartile range); same length as x when set.
  std::vector<double> lo, hi;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  /// Horizontal reference line, drawn dashed when set.
  std::optional<double> reference;
};

/// Static line chart with optional shaded bands, as a standalone SVG file.
void write_svg_plot(const std::filesystem::path& path, const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace n2d::harness
