// SPDX-License-Identifier: Apache-2.0

#include "cascade_ris/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace cascade_ris {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SweepRow>& rows, std::string_view x_label) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SweepRow*>> by_series;
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& r : rows) {
    if (!r.valid) continue;
    if (!by_series.contains(r.series)) order.push_back(r.series);
    by_series[r.series].push_back(&r);
    xmin = std::min(xmin, r.axis_value);
    xmax = std::max(xmax, r.axis_value);
    ymin = std::min(ymin, r.estimate.mean_bits - r.estimate.std_error);
    ymax = std::max(ymax, r.estimate.mean_bits + r.estimate.std_error);
  }
  if (order.empty()) {
    xmin = 0;
    xmax = 1;
    ymin = 0;
    ymax = 1;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double yv = ymin + (ymax - ymin) * i / 4.0;
    svg << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + ph + 16)
        << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
    svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">"
        << tick(yv) << "</text>\n";
  }
  svg << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10)
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  svg << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num(kTop + ph / 2) << ")\">ergodic capacity [bits/s/Hz]</text>\n";

  for (std::size_t i = 0; i < order.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    const auto& pts = by_series[order[i]];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto* r : pts) svg << num(sx(r->axis_value)) << ',' << num(sy(r->estimate.mean_bits)) << ' ';
    svg << "\"/>\n";
    for (const auto* r : pts) {
      const double x = sx(r->axis_value);
      svg << "<line x1=\"" << num(x) << "\" x2=\"" << num(x) << "\" y1=\""
          << num(sy(r->estimate.mean_bits - r->estimate.std_error)) << "\" y2=\""
          << num(sy(r->estimate.mean_bits + r->estimate.std_error)) << "\" stroke=\"" << color << "\"/>\n";
      svg << "<circle cx=\"" << num(x) << "\" cy=\"" << num(sy(r->estimate.mean_bits)) << "\" r=\"2.5\" fill=\""
          << color << "\"/>\n";
    }
    const double ly = kTop + 14 + 18.0 * static_cast<double>(i);
    svg << "<line x1=\"" << num(kLeft + pw + 10) << "\" x2=\"" << num(kLeft + pw + 30) << "\" y1=\"" << num(ly - 4)
        << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(kLeft + pw + 36) << "\" y=\"" << num(ly) << "\">" << order[i] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cascade_ris
