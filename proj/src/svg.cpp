#include "hinfcalc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hinfcalc/io.hpp"

namespace hinfcalc::svg {

namespace {

constexpr int kWidth = 860;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

std::string fmt(double v) { return io::format_number(v); }

}  // namespace

std::string render_log_ratio_chart(const std::vector<sweep::SweepRecord>& records) {
  // Series keyed by "family/g_id" in first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double x_min = 0.0, x_max = 1.0, y_max = 1e-12;
  bool any = false;
  for (const sweep::SweepRecord& r : records) {
    const std::string key = r.family + "/" + r.g_id;
    if (series.find(key) == series.end()) order.push_back(key);
    const double x = std::log10(r.eps);
    series[key].emplace_back(x, r.log_ratio);
    x_min = any ? std::min(x_min, x) : x;
    x_max = any ? std::max(x_max, x) : x;
    y_max = std::max(y_max, r.log_ratio);
    any = true;
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  y_max *= 1.05;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) {
    return kMarginLeft + plot_w * (x - x_min) / (x_max - x_min);
  };
  const auto sy = [&](double y) { return kMarginTop + plot_h * (1.0 - y / y_max); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\" "
      << "font-family=\"sans-serif\">norm growth ratio vs eps</text>\n";

  // Axes.
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
      << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const int x_ticks = 6;
  for (int i = 0; i <= x_ticks; ++i) {
    const double x = x_min + (x_max - x_min) * i / x_ticks;
    out << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << kMarginTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">1e"
        << fmt(x) << "</text>\n";
  }
  const int y_ticks = 5;
  for (int i = 0; i <= y_ticks; ++i) {
    const double y = y_max * i / y_ticks;
    out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << fmt(sy(y) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(y)
        << "</text>\n";
  }
  out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">eps "
      << "(log scale)</text>\n";

  // Series.
  int color = 0;
  for (const std::string& key : order) {
    auto points = series[key];
    std::sort(points.begin(), points.end());
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 10]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : points) {
      out << fmt(sx(x)) << "," << fmt(sy(y)) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << kMarginLeft + plot_w - 4 << "\" y=\""
        << kMarginTop + 14 + 14 * color << "\" text-anchor=\"end\" font-size=\"11\" "
        << "font-family=\"sans-serif\" fill=\"" << kPalette[color % 10] << "\">" << key
        << "</text>\n";
    ++color;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hinfcalc::svg
