#include "dirac/svg.hpp"

#include "dirac/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dirac::cli {

SvgStyle style_for(const FigureDataset& dataset) {
  SvgStyle style;
  const bool is_trace = std::any_of(dataset.series.begin(), dataset.series.end(),
                                    [](const Series& s) { return s.label == "S_bits"; });
  if (is_trace) style.series = {"S_bits"};
  return style;
}

std::string legend_label(const std::string& label) {
  if (label == "prob_minus") return "chirality -1";
  if (label == "prob_plus") return "chirality +1";
  if (label == "S_bits") return "S (bits)";
  return label;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(1, target);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double f : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double x, y, w, h;
};

std::vector<const Series*> selected(const FigureDataset& ds, const std::vector<std::string>& names) {
  std::vector<const Series*> out;
  for (const Series& s : ds.series) {
    if (names.empty() || std::find(names.begin(), names.end(), s.label) != names.end()) out.push_back(&s);
  }
  return out;
}

void draw_panel(std::ostream& out, const FigureDataset& ds, const SvgStyle& style, const Box& frame, bool compact) {
  const std::vector<const Series*> series = selected(ds, style.series);
  const Index n = ds.abscissa.size();
  double xlo = ds.abscissa.minCoeff();
  double xhi = ds.abscissa.maxCoeff();
  double ylo = 0.0;
  double yhi = 0.0;
  bool first = true;
  for (const Series* s : series) {
    ylo = first ? s->values.minCoeff() : std::min(ylo, s->values.minCoeff());
    yhi = first ? s->values.maxCoeff() : std::max(yhi, s->values.maxCoeff());
    first = false;
  }
  if (!(xhi > xlo)) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  if (!(yhi > ylo)) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  const double pad = 0.05 * (yhi - ylo);
  ylo -= pad;
  yhi += pad;

  const double left = compact ? 44.0 : 64.0;
  const double bottom = compact ? 30.0 : 46.0;
  const double top = compact ? 22.0 : 34.0;
  const double right = 14.0;
  const Box plot{frame.x + left, frame.y + top, frame.w - left - right, frame.h - top - bottom};
  auto px = [&](double x) { return plot.x + (x - xlo) / (xhi - xlo) * plot.w; };
  auto py = [&](double y) { return plot.y + (yhi - y) / (yhi - ylo) * plot.h; };
  const int font = compact ? 10 : 12;

  if (!ds.title.empty()) {
    out << "<text x=\"" << fmt(frame.x + frame.w / 2) << "\" y=\"" << fmt(frame.y + top - 12)
        << "\" text-anchor=\"middle\" font-size=\"" << font + 2 << "\">" << escape(ds.title) << "</text>\n";
  }
  out << "<rect x=\"" << fmt(plot.x) << "\" y=\"" << fmt(plot.y) << "\" width=\"" << fmt(plot.w) << "\" height=\""
      << fmt(plot.h) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (const double t : nice_ticks(xlo, xhi, compact ? 4 : 6)) {
    const double x = px(t);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(plot.y + plot.h) << "\" x2=\"" << fmt(x) << "\" y2=\""
        << fmt(plot.y + plot.h + 4) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(plot.y + plot.h + 4 + font) << "\" text-anchor=\"middle\" font-size=\""
        << font << "\">" << tick_text(t) << "</text>\n";
  }
  for (const double t : nice_ticks(ylo, yhi, compact ? 3 : 5)) {
    const double y = py(t);
    out << "<line x1=\"" << fmt(plot.x - 4) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(plot.x) << "\" y2=\"" << fmt(y)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(plot.x - 6) << "\" y=\"" << fmt(y + font / 3.0) << "\" text-anchor=\"end\" font-size=\""
        << font << "\">" << tick_text(t) << "</text>\n";
  }
  if (!compact) {
    out << "<text x=\"" << fmt(plot.x + plot.w / 2) << "\" y=\"" << fmt(frame.y + frame.h - 8)
        << "\" text-anchor=\"middle\" font-size=\"" << font << "\">" << escape(ds.abscissa_label) << "</text>\n";
  }

  for (std::size_t k = 0; k < series.size(); ++k) {
    const std::string& colour = style.palette[k % style.palette.size()];
    const RealVector& v = series[k]->values;
    if (n == 1) {
      out << "<circle cx=\"" << fmt(px(ds.abscissa(0))) << "\" cy=\"" << fmt(py(v(0))) << "\" r=\"3\" fill=\"" << colour
          << "\"/>\n";
      continue;
    }
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (Index i = 0; i < n; ++i) out << (i ? " " : "") << fmt(px(ds.abscissa(i))) << ',' << fmt(py(v(i)));
    out << "\"/>\n";
  }

  // Legend, top right inside the plot area.
  const double row = font + 4.0;
  const double lx = plot.x + plot.w - (compact ? 90.0 : 120.0);
  double ly = plot.y + 8.0;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const std::string& colour = style.palette[k % style.palette.size()];
    out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly + font / 2.0) << "\" x2=\"" << fmt(lx + 18) << "\" y2=\""
        << fmt(ly + font / 2.0) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(lx + 22) << "\" y=\"" << fmt(ly + font - 1) << "\" font-size=\"" << font << "\">"
        << escape(legend_label(series[k]->label)) << "</text>\n";
    ly += row;
  }
}

}  // namespace

void write_svg_plot(std::ostream& out, const FigureDataset& dataset, const SvgStyle& style) {
  dataset.check();
  if (dataset.abscissa.size() == 0 || selected(dataset, style.series).empty()) {
    throw std::invalid_argument("cannot plot an empty dataset");
  }
  const double total_height = style.height + (dataset.insets.empty() ? 0.0 : style.inset_height);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(style.width) << "\" height=\""
      << fmt(total_height) << "\" viewBox=\"0 0 " << fmt(style.width) << ' ' << fmt(total_height)
      << "\" font-family=\"sans-serif\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(style.width) << "\" height=\"" << fmt(total_height)
      << "\" fill=\"white\"/>\n";
  draw_panel(out, dataset, style, {0.0, 0.0, style.width, style.height}, false);
  if (!dataset.insets.empty()) {
    const double w = style.width / static_cast<double>(dataset.insets.size());
    for (std::size_t k = 0; k < dataset.insets.size(); ++k) {
      SvgStyle inset_style = style_for(dataset.insets[k]);
      inset_style.palette = style.palette;
      draw_panel(out, dataset.insets[k], inset_style, {w * static_cast<double>(k), style.height, w, style.inset_height},
                 true);
    }
  }
  out << "</svg>\n";
}

void write_svg_plot(const FigureDataset& dataset, const std::filesystem::path& path, const SvgStyle& style) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_svg_plot(out, dataset, style);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace dirac::cli
