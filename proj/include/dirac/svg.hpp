// Standalone SVG 1.1 line plots of figure datasets. Presentation only;
// regression tests compare CSV output, never SVG.
#ifndef DIRAC_SVG_HPP
#define DIRAC_SVG_HPP

#include "dirac/experiments.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace dirac::cli {

struct SvgStyle {
  double width = 640.0;
  double height = 420.0;
  double inset_height = 200.0;
  /// Series to draw; empty draws every series.
  std::vector<std::string> series;
  std::vector<std::string> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
};

/// Style that draws only the entropy column of trace datasets.
SvgStyle style_for(const FigureDataset& dataset);

/// Legend text for a series label, e.g. prob_minus -> "chirality -1".
std::string legend_label(const std::string& series_label);

/// "Nice" tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 5);

/// Main panel on top, insets in a row beneath it. Throws std::invalid_argument for an empty dataset.
void write_svg_plot(std::ostream& out, const FigureDataset& dataset, const SvgStyle& style);

/// Throws IoError on failure.
void write_svg_plot(const FigureDataset& dataset, const std::filesystem::path& path, const SvgStyle& style);

}  // namespace dirac::cli

#endif  // DIRAC_SVG_HPP
